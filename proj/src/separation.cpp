#include "ordpar/separation.hpp"

#include <algorithm>

namespace ordpar {

Rat LinearInequality::evaluate(std::span<const Rat> x) const
{
    if (x.size() != coefficients.size())
        throw DimensionMismatch("inequality over " + std::to_string(coefficients.size()) +
                                " variables evaluated at a point of dimension " + std::to_string(x.size()));
    Rat sum;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!coefficients[j].is_zero())
            sum += coefficients[j] * x[j];
    return sum;
}

std::string LinearInequality::to_string() const { return join(coefficients, " ") + " >= " + rhs.to_string(); }

Rat parity_lhs(std::span<const Rat> lambdas, std::span<const std::size_t> f_set)
{
    std::vector<bool> in_f(lambdas.size(), false);
    for (std::size_t i : f_set)
        in_f.at(i) = true;
    Rat lhs;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        lhs += in_f[i] ? Rat(1) - lambdas[i] : lambdas[i];
    return lhs;
}

SeparationCertificate separate(const GroupShape& shape, Parity parity, const GroupedPoint& point)
{
    if (!(point.shape() == shape))
        throw DimensionMismatch("point shape " + point.shape().to_string() + " differs from " + shape.to_string());

    const std::size_t k = shape.group_count();
    const Rat half(1, 2);
    SeparationCertificate cert;
    cert.lambdas.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_ordered_unit_box(point.group(i)))
            throw NotInOrderedBox("group " + std::to_string(i + 1) + " (" + join(point.group(i)) +
                                  ") is not ordered in [0,1]");
        cert.lambdas.push_back(alternating_sum(point.group(i)));
    }

    std::vector<bool> in_f(k, false);
    std::size_t size = 0;
    std::size_t closest = 0;
    Rat closest_distance = abs(cert.lambdas[0] - half);
    for (std::size_t i = 0; i < k; ++i) {
        if (cert.lambdas[i] > half) {
            in_f[i] = true;
            ++size;
        }
        Rat distance = abs(cert.lambdas[i] - half);
        if (distance < closest_distance) {
            closest = i;
            closest_distance = std::move(distance);
        }
    }
    const bool want_odd = parity == Parity::Even;
    if ((size % 2 == 1) != want_odd)
        in_f[closest] = !in_f[closest];

    for (std::size_t i = 0; i < k; ++i)
        if (in_f[i])
            cert.f_set.push_back(i);
    cert.lhs_value = parity_lhs(cert.lambdas, cert.f_set);
    cert.violated = cert.lhs_value < Rat(1);
    return cert;
}

LinearInequality inequality_for_f_set(const GroupShape& shape, std::span<const std::size_t> f_set)
{
    const std::size_t k = shape.group_count();
    std::vector<bool> in_f(k, false);
    for (std::size_t i : f_set) {
        if (i >= k)
            throw IndexOutOfRange("flip set index " + std::to_string(i + 1) + " exceeds k = " + std::to_string(k));
        in_f[i] = true;
    }
    std::size_t f_size = 0;
    LinearInequality ineq;
    ineq.coefficients.reserve(shape.dimension());
    for (std::size_t i = 0; i < k; ++i) {
        const int lead = in_f[i] ? -1 : 1;
        f_size += in_f[i] ? 1 : 0;
        for (std::size_t j = 0; j < shape.size(i); ++j)
            ineq.coefficients.emplace_back(j % 2 == 0 ? lead : -lead);
    }
    ineq.rhs = Rat(1) - Rat(static_cast<std::int64_t>(f_size));
    return ineq;
}

std::vector<LinearInequality> box_inequalities(const GroupShape& shape)
{
    std::vector<LinearInequality> out;
    const std::size_t n = shape.dimension();
    for (std::size_t i = 0; i < shape.group_count(); ++i) {
        const std::size_t first = shape.offset(i);
        const std::size_t r = shape.size(i);
        LinearInequality top{std::vector<Rat>(n), Rat(-1)};
        top.coefficients[first] = -1;
        out.push_back(std::move(top));
        for (std::size_t j = 0; j + 1 < r; ++j) {
            LinearInequality order{std::vector<Rat>(n), Rat(0)};
            order.coefficients[first + j] = 1;
            order.coefficients[first + j + 1] = -1;
            out.push_back(std::move(order));
        }
        LinearInequality bottom{std::vector<Rat>(n), Rat(0)};
        bottom.coefficients[first + r - 1] = 1;
        out.push_back(std::move(bottom));
    }
    return out;
}

std::vector<LinearInequality> outer_description(const GroupShape& shape, Parity parity)
{
    const std::size_t k = shape.group_count();
    if (k > kMaxDescriptionGroups)
        throw TooManyGroups("outer description enumerates 2^(k-1) flip sets; k = " + std::to_string(k) +
                            " exceeds " + std::to_string(kMaxDescriptionGroups));
    std::vector<LinearInequality> out = box_inequalities(shape);
    const unsigned wanted = parity == Parity::Even ? 1u : 0u;
    std::vector<std::size_t> f_set;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask) % 2) != wanted)
            continue;
        f_set.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1u)
                f_set.push_back(i);
        out.push_back(inequality_for_f_set(shape, f_set));
    }
    return out;
}

std::string format_index_set(std::span<const std::size_t> indices)
{
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(indices[i] + 1);
    }
    return out + "}";
}

}  // namespace ordpar
