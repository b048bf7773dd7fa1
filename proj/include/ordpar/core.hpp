#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordpar/errors.hpp"
#include "ordpar/rational.hpp"

namespace ordpar {

enum class Parity { Even, Odd };

Parity parse_parity(std::string_view text);
std::string to_string(Parity parity);
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/**
 * Partition of n variables into k contiguous, ordered groups of sizes r_1..r_k.
 * Group indices are 0-based throughout the library; text output is 1-based.
 */
class GroupShape {
public:
    explicit GroupShape(std::vector<std::size_t> groups);

    /// Parses "2,2,1".
    static GroupShape parse(std::string_view text);
    /// The all-ones shape (1,...,1) with n groups.
    static GroupShape unit(std::size_t n);

    std::size_t group_count() const { return groups_.size(); }
    std::size_t size(std::size_t group) const { return groups_.at(group); }
    /// Flat index of the first entry of a group.
    std::size_t offset(std::size_t group) const { return offsets_.at(group); }
    std::size_t dimension() const { return dimension_; }
    const std::vector<std::size_t>& groups() const { return groups_; }

    /// The shape with one more group of size r appended.
    GroupShape appended(std::size_t r) const;
    /// The sub-shape made of the selected groups, in the given order.
    GroupShape restricted(std::span<const std::size_t> selection) const;

    std::string to_string() const;

    friend bool operator==(const GroupShape&, const GroupShape&) = default;

private:
    std::vector<std::size_t> groups_;
    std::vector<std::size_t> offsets_;
    std::size_t dimension_ = 0;
};

/// A point (x^(1),...,x^(k)) with one rational sub-vector per group.
class GroupedPoint {
public:
    GroupedPoint(GroupShape shape, std::vector<std::vector<Rat>> entries);

    static GroupedPoint from_flat(const GroupShape& shape, std::span<const Rat> flat);
    static GroupedPoint zeros(const GroupShape& shape);
    /// Parses "1,1/2;1,0": groups separated by ';', entries by ','. The shape is inferred.
    static GroupedPoint parse(std::string_view text);

    const GroupShape& shape() const { return shape_; }
    std::span<const Rat> group(std::size_t i) const { return entries_.at(i); }
    const std::vector<std::vector<Rat>>& groups() const { return entries_; }
    std::vector<Rat> flat() const;
    Rat total() const;

    GroupedPoint restricted(std::span<const std::size_t> selection) const;

    std::string to_string() const;

    friend bool operator==(const GroupedPoint&, const GroupedPoint&) = default;

private:
    GroupShape shape_;
    std::vector<std::vector<Rat>> entries_;
};

/// x_1 - x_2 + x_3 - ... ; zero for the empty sequence.
Rat alternating_sum(std::span<const Rat> x);

/// True iff 1 >= x_1 >= ... >= x_n >= 0.
bool is_ordered_unit_box(std::span<const Rat> x);
bool is_ordered_unit_box(const GroupedPoint& point);

/// Parity of the number of ones of a 0/1 point. Throws NonBinaryEntry otherwise.
Parity integer_parity(const GroupedPoint& point);

/// min(z, r - z, 1/2) for 0 <= z <= r. Throws OutOfRange otherwise.
Rat gamma(const Rat& z, std::size_t r);

/// Comma separated list of rationals, e.g. "1,-1,0,2".
std::vector<Rat> parse_rat_list(std::string_view text);
std::string join(std::span<const Rat> values, std::string_view separator = ",");

std::vector<std::string_view> split(std::string_view text, char separator);

}  // namespace ordpar
