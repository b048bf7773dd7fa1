#include <sstream>

#include "ordpar/errors.hpp"
#include "ordpar/exactlp.hpp"

namespace ordpar::lp {

std::string to_string(Sense sense)
{
    switch (sense) {
    case Sense::LessEqual:
        return "<=";
    case Sense::Equal:
        return "=";
    case Sense::GreaterEqual:
        return ">=";
    }
    return "?";
}

std::string to_string(Status status)
{
    switch (status) {
    case Status::Optimal:
        return "optimal";
    case Status::Infeasible:
        return "infeasible";
    case Status::Unbounded:
        return "unbounded";
    }
    return "?";
}

LinearProgram::LinearProgram(std::size_t variables)
    : objective(variables), lower(variables, Rat(0)), upper(variables)
{
}

void LinearProgram::add_row(std::vector<Rat> coefficients, Sense sense, Rat rhs)
{
    rows.push_back(Row{std::move(coefficients), sense, std::move(rhs)});
}

std::string to_string(const LinearProgram& program)
{
    std::ostringstream out;
    out << (program.direction == Direction::Minimize ? "min" : "max") << ' ' << join(program.objective, " ")
        << " st\n";
    for (const auto& row : program.rows)
        out << "  " << join(row.coefficients, " ") << ' ' << to_string(row.sense) << ' ' << row.rhs << '\n';
    for (std::size_t j = 0; j < program.variable_count(); ++j) {
        out << "  x" << j << " in [" << (program.lower[j] ? program.lower[j]->to_string() : "-inf") << ", "
            << (program.upper[j] ? program.upper[j]->to_string() : "inf") << "]\n";
    }
    return out.str();
}

namespace {

// Original variable j equals shift + sum(sign * y_col) over its standard-form columns.
struct VariableMap {
    Rat shift;
    std::vector<std::pair<std::size_t, int>> columns;
};

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t columns)
        : cells_(rows, std::vector<Rat>(columns + 1)), basis_(rows), columns_(columns)
    {
    }

    std::size_t rows() const { return cells_.size(); }
    std::size_t columns() const { return columns_; }
    Rat& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
    Rat& rhs(std::size_t r) { return cells_[r][columns_]; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }

    void erase_row(std::size_t r)
    {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    // `cost` holds reduced costs followed by the negated objective value.
    void pivot(std::size_t r, std::size_t c, std::vector<Rat>& cost)
    {
        auto& pivot_row = cells_[r];
        const Rat inverse = Rat(1) / pivot_row[c];
        nonzero_.clear();
        for (std::size_t j = 0; j <= columns_; ++j) {
            if (pivot_row[j].is_zero())
                continue;
            pivot_row[j] *= inverse;
            nonzero_.push_back(j);
        }
        auto eliminate = [&](std::vector<Rat>& row) {
            if (row[c].is_zero())
                return;
            const Rat factor = row[c];
            for (std::size_t j : nonzero_)
                row[j] -= factor * pivot_row[j];
        };
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (i != r)
                eliminate(cells_[i]);
        eliminate(cost);
        basis_[r] = c;
    }

private:
    std::vector<std::vector<Rat>> cells_;
    std::vector<std::size_t> basis_;
    std::size_t columns_;
    std::vector<std::size_t> nonzero_;
};

enum class PhaseResult { Optimal, Unbounded };

// Bland's rule: lowest eligible entering index, ratio ties broken by lowest basic index.
PhaseResult run_phase(Tableau& t, std::vector<Rat>& cost, std::size_t eligible_columns, std::size_t& pivots)
{
    while (true) {
        std::size_t entering = eligible_columns;
        for (std::size_t j = 0; j < eligible_columns; ++j)
            if (cost[j].sign() < 0) {
                entering = j;
                break;
            }
        if (entering == eligible_columns)
            return PhaseResult::Optimal;

        std::size_t leaving = t.rows();
        Rat best_ratio;
        for (std::size_t i = 0; i < t.rows(); ++i) {
            const Rat& a = t.at(i, entering);
            if (a.sign() <= 0)
                continue;
            Rat ratio = t.rhs(i) / a;
            if (leaving == t.rows() || ratio < best_ratio ||
                (ratio == best_ratio && t.basic(i) < t.basic(leaving))) {
                leaving = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leaving == t.rows())
            return PhaseResult::Unbounded;
        if (++pivots > kPivotLimit)
            throw PivotLimitExceeded("simplex exceeded " + std::to_string(kPivotLimit) + " pivots");
        t.pivot(leaving, entering, cost);
    }
}

std::vector<Rat> reduced_costs(const Tableau& t, const std::vector<Rat>& costs)
{
    std::vector<Rat> out(t.columns() + 1);
    for (std::size_t j = 0; j < costs.size(); ++j)
        out[j] = costs[j];
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const std::size_t b = t.basic(i);
        if (b >= costs.size() || costs[b].is_zero())
            continue;
        for (std::size_t j = 0; j <= t.columns(); ++j)
            if (!t.at(i, j).is_zero())
                out[j] -= costs[b] * t.at(i, j);
    }
    return out;
}

}  // namespace

bool satisfies(const LinearProgram& program, std::span<const Rat> solution)
{
    if (solution.size() != program.variable_count())
        return false;
    for (std::size_t j = 0; j < solution.size(); ++j) {
        if (program.lower[j] && solution[j] < *program.lower[j])
            return false;
        if (program.upper[j] && solution[j] > *program.upper[j])
            return false;
    }
    for (const auto& row : program.rows) {
        Rat lhs;
        for (std::size_t j = 0; j < solution.size(); ++j)
            if (!row.coefficients[j].is_zero())
                lhs += row.coefficients[j] * solution[j];
        const bool ok = row.sense == Sense::LessEqual  ? lhs <= row.rhs
                        : row.sense == Sense::Equal    ? lhs == row.rhs
                                                       : lhs >= row.rhs;
        if (!ok)
            return false;
    }
    return true;
}

LPOutcome solve(const LinearProgram& program)
{
    const std::size_t n = program.variable_count();
    if (program.lower.size() != n || program.upper.size() != n)
        throw MalformedProgram("bound vectors do not match the variable count");
    for (std::size_t i = 0; i < program.rows.size(); ++i)
        if (program.rows[i].coefficients.size() != n)
            throw MalformedProgram("row " + std::to_string(i) + " has " +
                                   std::to_string(program.rows[i].coefficients.size()) + " coefficients, expected " +
                                   std::to_string(n));

    // Standard form: structural columns y >= 0, rows with nonnegative rhs.
    std::vector<VariableMap> map(n);
    std::size_t structural = 0;
    std::vector<Row> rows;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& lo = program.lower[j];
        const auto& up = program.upper[j];
        if (lo) {
            map[j].shift = *lo;
            map[j].columns.push_back({structural++, +1});
        } else if (up) {
            map[j].shift = *up;
            map[j].columns.push_back({structural++, -1});
        } else {
            map[j].columns.push_back({structural++, +1});
            map[j].columns.push_back({structural++, -1});
        }
    }
    auto translate = [&](const std::vector<Rat>& coefficients, Sense sense, Rat rhs) {
        Row row{std::vector<Rat>(structural), sense, std::move(rhs)};
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& a = coefficients[j];
            if (a.is_zero())
                continue;
            row.rhs -= a * map[j].shift;
            for (auto [col, s] : map[j].columns)
                row.coefficients[col] = s > 0 ? a : -a;
        }
        return row;
    };
    for (const auto& row : program.rows)
        rows.push_back(translate(row.coefficients, row.sense, row.rhs));
    for (std::size_t j = 0; j < n; ++j)
        if (program.lower[j] && program.upper[j]) {
            std::vector<Rat> unit(n);
            unit[j] = 1;
            rows.push_back(translate(unit, Sense::LessEqual, *program.upper[j]));
        }
    for (auto& row : rows)
        if (row.rhs.sign() < 0) {
            for (auto& a : row.coefficients)
                a = -a;
            row.rhs = -row.rhs;
            if (row.sense == Sense::LessEqual)
                row.sense = Sense::GreaterEqual;
            else if (row.sense == Sense::GreaterEqual)
                row.sense = Sense::LessEqual;
        }

    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& row : rows) {
        if (row.sense != Sense::Equal)
            ++slacks;
        if (row.sense != Sense::LessEqual)
            ++artificials;
    }
    const std::size_t first_artificial = structural + slacks;
    Tableau t(rows.size(), first_artificial + artificials);
    {
        std::size_t slack = structural;
        std::size_t artificial = first_artificial;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < structural; ++j)
                t.at(i, j) = rows[i].coefficients[j];
            t.rhs(i) = rows[i].rhs;
            if (rows[i].sense == Sense::LessEqual) {
                t.at(i, slack) = 1;
                t.basic(i) = slack++;
            } else {
                if (rows[i].sense == Sense::GreaterEqual)
                    t.at(i, slack++) = -1;
                t.at(i, artificial) = 1;
                t.basic(i) = artificial++;
            }
        }
    }

    LPOutcome outcome;
    if (artificials > 0) {
        std::vector<Rat> phase_one(t.columns());
        for (std::size_t j = first_artificial; j < t.columns(); ++j)
            phase_one[j] = 1;
        std::vector<Rat> cost = reduced_costs(t, phase_one);
        run_phase(t, cost, t.columns(), outcome.pivots);
        if (cost[t.columns()].sign() != 0) {
            outcome.status = Status::Infeasible;
            return outcome;
        }
        // Drive remaining zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = t.rows(); i-- > 0;) {
            if (t.basic(i) < first_artificial)
                continue;
            std::size_t column = first_artificial;
            for (std::size_t j = 0; j < first_artificial; ++j)
                if (!t.at(i, j).is_zero()) {
                    column = j;
                    break;
                }
            if (column == first_artificial)
                t.erase_row(i);
            else
                t.pivot(i, column, cost);
        }
    }

    std::vector<Rat> costs(first_artificial);
    for (std::size_t j = 0; j < n; ++j) {
        Rat c = program.direction == Direction::Minimize ? program.objective[j] : -program.objective[j];
        for (auto [col, s] : map[j].columns)
            costs[col] = s > 0 ? c : -c;
    }
    std::vector<Rat> cost = reduced_costs(t, costs);
    if (run_phase(t, cost, first_artificial, outcome.pivots) == PhaseResult::Unbounded) {
        outcome.status = Status::Unbounded;
        return outcome;
    }

    std::vector<Rat> y(t.columns());
    for (std::size_t i = 0; i < t.rows(); ++i)
        y[t.basic(i)] = t.rhs(i);
    outcome.solution.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat v = map[j].shift;
        for (auto [col, s] : map[j].columns)
            v += s > 0 ? y[col] : -y[col];
        outcome.solution[j] = std::move(v);
        if (!program.objective[j].is_zero())
            outcome.value += program.objective[j] * outcome.solution[j];
    }
    outcome.status = Status::Optimal;
    return outcome;
}

}  // namespace ordpar::lp
