#include "geomrep/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace geomrep {

namespace {

// Dense simplex tableau over exact rationals: rows are equality constraints
// A x = b with b >= 0 and x >= 0; basis[i] is the basic column of row i.
struct Tableau {
    std::vector<Vec> rows;  // each of size n_cols + 1, last entry = rhs
    std::vector<int> basis;
    int n_cols = 0;

    Rat& rhs(size_t r) { return rows[r][n_cols]; }

    void pivot(size_t r, int s) {
        Rat inv = Rat(1) / rows[r][s];
        for (int c = 0; c <= n_cols; ++c) rows[r][c] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][s] == 0) continue;
            Rat f = rows[i][s];
            for (int c = 0; c <= n_cols; ++c) rows[i][c] -= f * rows[r][c];
        }
        basis[r] = s;
    }

    // Maximizes the objective whose reduced-cost row is zrow (size n_cols + 1,
    // last slot = objective value). Bland's rule: entering = smallest column
    // with positive reduced cost, leaving = smallest basic index among ties.
    // Returns false on unboundedness.
    bool simplex(Vec& zrow) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_cols; ++j) {
                if (zrow[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rhs(i) / rows[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = static_cast<int>(i);
                }
            }
            if (leave < 0) return false;
            size_t r = static_cast<size_t>(leave);
            pivot(r, enter);
            Rat f = zrow[enter];
            for (int c = 0; c <= n_cols; ++c) zrow[c] -= f * rows[r][c];
        }
    }
};

// Reduced-cost row; the rhs slot holds MINUS the objective value so the
// same pivot update rule applies to every column.
Vec reduced_costs(const Tableau& t, const Vec& costs) {
    Vec zrow(t.n_cols + 1, Rat(0));
    for (int j = 0; j < t.n_cols; ++j) zrow[j] = j < static_cast<int>(costs.size()) ? costs[j] : Rat(0);
    Rat value = 0;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        int b = t.basis[i];
        Rat cb = b < static_cast<int>(costs.size()) ? costs[b] : Rat(0);
        if (cb == 0) continue;
        for (int c = 0; c < t.n_cols; ++c) zrow[c] -= cb * t.rows[i][c];
        value += cb * t.rows[i][t.n_cols];
    }
    zrow[t.n_cols] = -value;
    return zrow;
}

void check_assignment(const LinearProgram& lp, const Vec& x) {
    for (const auto& c : lp.constraints) {
        Rat lhs = dot(c.coeffs, x);
        bool ok = (c.rel == Rel::LessEq) ? (lhs <= c.rhs) : (lhs == c.rhs);
        if (!ok) throw std::logic_error("lp solve produced an assignment violating a constraint");
    }
}

}  // namespace

LpResult solve(const LinearProgram& lp) {
    size_t nv = lp.variables.size();
    for (const auto& c : lp.constraints)
        if (c.coeffs.size() != nv)
            throw std::invalid_argument("lp constraint width does not match variable count");
    if (lp.objective && lp.objective->size() != nv)
        throw std::invalid_argument("lp objective width does not match variable count");

    size_t m = lp.constraints.size();
    size_t n_slack = 0;
    for (const auto& c : lp.constraints)
        if (c.rel == Rel::LessEq) ++n_slack;

    // Columns: u_0..u_{nv-1}, w_0..w_{nv-1} (x = u - w), slacks, artificials.
    int n_real = static_cast<int>(2 * nv + n_slack);
    int n_cols = n_real + static_cast<int>(m);

    Tableau t;
    t.n_cols = n_cols;
    t.rows.assign(m, Vec(n_cols + 1, Rat(0)));
    t.basis.assign(m, -1);

    size_t slack_at = 2 * nv;
    for (size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        int flip = (c.rhs < 0) ? -1 : 1;
        for (size_t j = 0; j < nv; ++j) {
            t.rows[i][j] = flip * c.coeffs[j];
            t.rows[i][nv + j] = -flip * c.coeffs[j];
        }
        if (c.rel == Rel::LessEq) {
            t.rows[i][slack_at] = flip;
            ++slack_at;
        }
        t.rows[i][n_cols] = flip * c.rhs;
        t.rows[i][n_real + static_cast<int>(i)] = 1;
        t.basis[i] = n_real + static_cast<int>(i);
    }

    // Phase 1: maximize -sum(artificials).
    Vec phase1_costs(n_cols, Rat(0));
    for (int j = n_real; j < n_cols; ++j) phase1_costs[j] = -1;
    Vec zrow = reduced_costs(t, phase1_costs);
    if (!t.simplex(zrow)) throw std::logic_error("phase 1 unbounded");
    if (zrow[n_cols] != 0) {
        LpResult r;
        r.status = LpStatus::Infeasible;
        return r;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < n_real) {
            ++i;
            continue;
        }
        int piv = -1;
        for (int j = 0; j < n_real; ++j) {
            if (t.rows[i][j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv >= 0) {
            t.pivot(i, piv);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<long>(i));
            t.basis.erase(t.basis.begin() + static_cast<long>(i));
        }
    }
    // Artificial columns stay but must never re-enter: zero them out.
    for (auto& row : t.rows)
        for (int j = n_real; j < n_cols; ++j) row[j] = 0;

    auto extract = [&](LpResult& r) {
        Vec full(n_cols, Rat(0));
        for (size_t i = 0; i < t.rows.size(); ++i) full[t.basis[i]] = t.rows[i][n_cols];
        r.assignment.assign(nv, Rat(0));
        for (size_t j = 0; j < nv; ++j) r.assignment[j] = full[j] - full[nv + j];
        check_assignment(lp, r.assignment);
    };

    LpResult result;
    if (!lp.objective) {
        result.status = LpStatus::Feasible;
        extract(result);
        return result;
    }

    Vec phase2_costs(n_cols, Rat(0));
    for (size_t j = 0; j < nv; ++j) {
        phase2_costs[j] = (*lp.objective)[j];
        phase2_costs[nv + j] = -(*lp.objective)[j];
    }
    zrow = reduced_costs(t, phase2_costs);
    if (!t.simplex(zrow)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.value = -zrow[n_cols];
    extract(result);
    Rat check = dot(*lp.objective, result.assignment);
    if (check != result.value)
        throw std::logic_error("lp solve objective value mismatch");
    return result;
}

std::string lp_to_text(const LinearProgram& lp) {
    std::ostringstream os;
    if (lp.objective) {
        os << "maximize";
        for (size_t j = 0; j < lp.variables.size(); ++j)
            if ((*lp.objective)[j] != 0)
                os << " " << rat_to_string((*lp.objective)[j]) << "*" << lp.variables[j];
        os << "\n";
    }
    for (const auto& c : lp.constraints) {
        bool first = true;
        for (size_t j = 0; j < lp.variables.size(); ++j) {
            if (c.coeffs[j] == 0) continue;
            os << (first ? "" : " + ") << rat_to_string(c.coeffs[j]) << "*" << lp.variables[j];
            first = false;
        }
        if (first) os << "0";
        os << (c.rel == Rel::LessEq ? " <= " : " = ") << rat_to_string(c.rhs) << "\n";
    }
    return os.str();
}

}  // namespace geomrep
