#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cochar {

/// Integer partition: a weakly decreasing sequence of positive parts.
///
/// The total order implemented by operator< is the canonical order used for
/// every container and every serialized output: first by weight, then reverse
/// lexicographic within a weight, i.e. exactly the order generate_partitions
/// emits ((4) before (3,1) before (2,2) before (2,1,1) before (1,1,1,1)).
class Partition {
public:
    Partition() = default;

    /// Validating constructor: parts must be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-indexed part, 0 beyond the last row.
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const {
        if (weight_ != other.weight_) return weight_ < other.weight_;
        return other.parts_ < parts_; // reverse lexicographic within a weight
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n, in the canonical order (reverse lexicographic).
std::vector<Partition> generate_partitions(int n);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Componentwise containment of diagrams (missing parts read as 0).
bool contains(const Partition& outer, const Partition& inner);

/// Number of standard Young tableaux of shape p, by the hook length formula.
long long hook_dimension(const Partition& p);

/// "3,2,1"; the empty partition renders as the empty string.
std::string to_string(const Partition& p);

/// "(3,2,1)", with exponent shorthand for repeated parts: "(2,1^3)".
std::string to_display(const Partition& p);

/// Parses the comma-separated syntax accepted on the command line. Parts must
/// already be weakly decreasing; exponent shorthand is not accepted.
Partition parse_partition(const std::string& text);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

} // namespace cochar
