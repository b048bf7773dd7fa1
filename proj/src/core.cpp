#include "ordpar/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ordpar {

std::vector<std::string_view> split(std::string_view text, char separator)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(separator, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

Parity parse_parity(std::string_view text)
{
    if (text == "even")
        return Parity::Even;
    if (text == "odd")
        return Parity::Odd;
    throw ParseError("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

GroupShape::GroupShape(std::vector<std::size_t> groups) : groups_(std::move(groups))
{
    if (groups_.empty())
        throw InvalidShape("a shape needs at least one group");
    offsets_.reserve(groups_.size());
    for (std::size_t r : groups_) {
        if (r == 0)
            throw InvalidShape("group sizes must be positive");
        offsets_.push_back(dimension_);
        dimension_ += r;
    }
}

GroupShape GroupShape::parse(std::string_view text)
{
    std::vector<std::size_t> groups;
    for (auto token : split(text, ',')) {
        std::size_t value = 0;
        const auto* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (token.empty() || ec != std::errc() || ptr != end)
            throw ParseError("malformed shape '" + std::string(text) + "'");
        groups.push_back(value);
    }
    try {
        return GroupShape(std::move(groups));
    } catch (const InvalidShape& e) {
        throw ParseError("malformed shape '" + std::string(text) + "': " + e.what());
    }
}

GroupShape GroupShape::unit(std::size_t n) { return GroupShape(std::vector<std::size_t>(n, 1)); }

GroupShape GroupShape::appended(std::size_t r) const
{
    auto groups = groups_;
    groups.push_back(r);
    return GroupShape(std::move(groups));
}

GroupShape GroupShape::restricted(std::span<const std::size_t> selection) const
{
    std::vector<std::size_t> groups;
    groups.reserve(selection.size());
    for (std::size_t i : selection) {
        if (i >= groups_.size())
            throw IndexOutOfRange("group index " + std::to_string(i + 1) + " exceeds k = " +
                                  std::to_string(groups_.size()));
        groups.push_back(groups_[i]);
    }
    return GroupShape(std::move(groups));
}

std::string GroupShape::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(groups_[i]);
    }
    return out;
}

GroupedPoint::GroupedPoint(GroupShape shape, std::vector<std::vector<Rat>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries))
{
    if (entries_.size() != shape_.group_count())
        throw DimensionMismatch("point has " + std::to_string(entries_.size()) + " groups, shape has " +
                                std::to_string(shape_.group_count()));
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].size() != shape_.size(i))
            throw DimensionMismatch("group " + std::to_string(i + 1) + " has " + std::to_string(entries_[i].size()) +
                                    " entries, shape requires " + std::to_string(shape_.size(i)));
}

GroupedPoint GroupedPoint::from_flat(const GroupShape& shape, std::span<const Rat> flat)
{
    if (flat.size() != shape.dimension())
        throw DimensionMismatch("flat vector of length " + std::to_string(flat.size()) + " for shape of dimension " +
                                std::to_string(shape.dimension()));
    std::vector<std::vector<Rat>> entries;
    entries.reserve(shape.group_count());
    for (std::size_t i = 0; i < shape.group_count(); ++i) {
        auto first = flat.begin() + static_cast<std::ptrdiff_t>(shape.offset(i));
        entries.emplace_back(first, first + static_cast<std::ptrdiff_t>(shape.size(i)));
    }
    return GroupedPoint(shape, std::move(entries));
}

GroupedPoint GroupedPoint::zeros(const GroupShape& shape)
{
    return from_flat(shape, std::vector<Rat>(shape.dimension()));
}

GroupedPoint GroupedPoint::parse(std::string_view text)
{
    std::vector<std::size_t> sizes;
    std::vector<std::vector<Rat>> entries;
    for (auto group_text : split(text, ';')) {
        std::vector<Rat> group = parse_rat_list(group_text);
        sizes.push_back(group.size());
        entries.push_back(std::move(group));
    }
    return GroupedPoint(GroupShape(std::move(sizes)), std::move(entries));
}

std::vector<Rat> GroupedPoint::flat() const
{
    std::vector<Rat> out;
    out.reserve(shape_.dimension());
    for (const auto& g : entries_)
        out.insert(out.end(), g.begin(), g.end());
    return out;
}

Rat GroupedPoint::total() const
{
    Rat sum;
    for (const auto& g : entries_)
        for (const auto& v : g)
            sum += v;
    return sum;
}

GroupedPoint GroupedPoint::restricted(std::span<const std::size_t> selection) const
{
    GroupShape shape = shape_.restricted(selection);
    std::vector<std::vector<Rat>> entries;
    entries.reserve(selection.size());
    for (std::size_t i : selection)
        entries.push_back(entries_[i]);
    return GroupedPoint(std::move(shape), std::move(entries));
}

std::string GroupedPoint::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ';';
        out += join(entries_[i]);
    }
    return out;
}

Rat alternating_sum(std::span<const Rat> x)
{
    Rat sum;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i % 2 == 0)
            sum += x[i];
        else
            sum -= x[i];
    }
    return sum;
}

bool is_ordered_unit_box(std::span<const Rat> x)
{
    Rat previous(1);
    for (const auto& v : x) {
        if (v > previous)
            return false;
        previous = v;
    }
    return x.empty() || x.back().sign() >= 0;
}

bool is_ordered_unit_box(const GroupedPoint& point)
{
    for (const auto& g : point.groups())
        if (!is_ordered_unit_box(g))
            return false;
    return true;
}

Parity integer_parity(const GroupedPoint& point)
{
    std::size_t ones = 0;
    for (const auto& g : point.groups())
        for (const auto& v : g) {
            if (v == Rat(1))
                ++ones;
            else if (!v.is_zero())
                throw NonBinaryEntry("entry " + v.to_string() + " is not 0 or 1");
        }
    return ones % 2 == 0 ? Parity::Even : Parity::Odd;
}

Rat gamma(const Rat& z, std::size_t r)
{
    const Rat upper(static_cast<std::int64_t>(r));
    if (z.sign() < 0 || z > upper)
        throw OutOfRange("z = " + z.to_string() + " outside [0, " + upper.to_string() + "]");
    return min(min(z, upper - z), Rat(1, 2));
}

std::vector<Rat> parse_rat_list(std::string_view text)
{
    std::vector<Rat> values;
    for (auto token : split(text, ',')) {
        try {
            values.push_back(Rat::parse(token));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return values;
}

std::string join(std::span<const Rat> values, std::string_view separator)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += separator;
        out += values[i].to_string();
    }
    return out;
}

}  // namespace ordpar
