#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hwcl {

// Eventually constant integer sequence lambda: entry j equals prefix[j]
// for j < len(prefix) and tail beyond. Canonical form: the prefix never
// ends with the tail value.
class Weight {
public:
    Weight() = default;
    Weight(std::vector<long long> prefix, long long tail);

    const std::vector<long long>& prefix() const { return prefix_; }
    long long tail() const { return tail_; }
    long long entry(std::size_t j) const {
        return j < prefix_.size() ? prefix_[j] : tail_;
    }

    bool is_zero() const { return prefix_.empty() && tail_ == 0; }
    bool finitely_supported() const { return tail_ == 0; }

    // sum of |entry| over the support; requires finite support
    long long size_abs() const;

    // first k entries
    std::vector<long long> truncate(std::size_t k) const;

    std::string to_string() const; // "a,b,c;t"

    bool operator==(const Weight& o) const = default;

private:
    std::vector<long long> prefix_;
    long long tail_ = 0;
};

// Integer tuple with zero tail and trailing zeros trimmed.
class FiniteWeight {
public:
    FiniteWeight() = default;
    explicit FiniteWeight(std::vector<long long> entries);

    const std::vector<long long>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    long long size_abs() const;

    bool operator==(const FiniteWeight& o) const = default;

private:
    std::vector<long long> entries_;
};

// Weakly decreasing tuple of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long long size() const; // box count |lambda|
    long long part(std::size_t i) const {
        return i < parts_.size() ? parts_[i] : 0;
    }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const = default;

private:
    std::vector<long long> parts_;
};

// Accepts "a,b,c;t", "a,b,c" (tail 0) and "" (the zero weight).
Weight parse_weight(std::string_view text);

// lambda'_i = #{j : lambda_j >= i}
Partition conjugate(const Partition& p);

// (positive entries sorted descending, |negative entries| sorted descending)
std::pair<Partition, Partition> split_signs(const FiniteWeight& w);

Weight dual_weight(const Weight& w);

} // namespace hwcl
