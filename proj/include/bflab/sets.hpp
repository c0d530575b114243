#pragma once

// Deduplicated scalar and point collections with canonical ascending
// iteration, and multiplicity tables (representation functions).

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <vector>

#include "bflab/plane.hpp"
#include "bflab/scalar.hpp"

namespace bflab {

class ScalarSet {
public:
    ScalarSet() = default;
    explicit ScalarSet(std::vector<Scalar> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    static ScalarSet of(std::initializer_list<long> values) {
        std::vector<Scalar> v;
        v.reserve(values.size());
        for (long x : values) v.emplace_back(x);
        return ScalarSet(std::move(v));
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    bool contains(const Scalar& s) const {
        return std::binary_search(items_.begin(), items_.end(), s);
    }
    bool contains_zero() const { return contains(Scalar(0)); }

    const std::vector<Scalar>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const ScalarSet& a, const ScalarSet& b) = default;

private:
    std::vector<Scalar> items_;  // ascending, unique
};

class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    bool contains(const Point& p) const {
        return std::binary_search(items_.begin(), items_.end(), p);
    }
    bool contains_origin() const { return contains(Point{Scalar(0), Scalar(0)}); }

    const std::vector<Point>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const PointSet& a, const PointSet& b) = default;

private:
    std::vector<Point> items_;  // lexicographically ascending, unique
};

// Scalar -> positive multiplicity. Total mass equals the number of counted
// pairs that were added.
class CountTable {
public:
    void add(const Scalar& key, std::uint64_t n = 1) {
        counts_[key] += n;
        mass_ += n;
    }

    std::uint64_t at(const Scalar& key) const {
        auto it = counts_.find(key);
        return it == counts_.end() ? 0 : it->second;
    }

    std::uint64_t mass() const { return mass_; }
    std::size_t distinct() const { return counts_.size(); }

    // Sum of squared multiplicities (the second moment of the table).
    std::uint64_t second_moment() const {
        std::uint64_t s = 0;
        for (const auto& [k, c] : counts_) s += c * c;
        return s;
    }

    std::uint64_t max_multiplicity() const {
        std::uint64_t m = 0;
        for (const auto& [k, c] : counts_) m = std::max(m, c);
        return m;
    }

    std::vector<std::pair<Scalar, std::uint64_t>> sorted_entries() const {
        std::vector<std::pair<Scalar, std::uint64_t>> v(counts_.begin(), counts_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    ScalarSet keys() const {
        std::vector<Scalar> v;
        v.reserve(counts_.size());
        for (const auto& [k, c] : counts_) v.push_back(k);
        return ScalarSet(std::move(v));
    }

    const std::unordered_map<Scalar, std::uint64_t, ScalarHash>& raw() const { return counts_; }

private:
    std::unordered_map<Scalar, std::uint64_t, ScalarHash> counts_;
    std::uint64_t mass_ = 0;
};

}  // namespace bflab
