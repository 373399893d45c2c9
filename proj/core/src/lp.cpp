#include "polarmin/lp.hpp"

#include <cstddef>
#include <algorithm>
#include <optional>

#include "polarmin/error.hpp"

namespace polarmin::lp {

void Program::add(std::vector<Rat> row, Sense s, Rat b) {
    if (static_cast<int>(row.size()) != vars) throw Error(ErrorKind::BadParams, "lp row has wrong width");
    rows.push_back(std::move(row));
    sense.push_back(s);
    rhs.push_back(std::move(b));
}

namespace {

using Matrix = std::vector<std::vector<Rat>>;

struct Tableau {
    Matrix a;                       // m rows, n columns
    std::vector<Rat> b;             // m
    std::vector<std::size_t> basis; // m

    std::size_t m() const { return a.size(); }
    std::size_t n() const { return a.empty() ? 0 : a[0].size(); }

    void pivot(std::size_t r, std::size_t c) {
        const Rat p = a[r][c];
        for (auto& v : a[r]) v /= p;
        b[r] /= p;
        for (std::size_t i = 0; i < m(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rat f = a[i][c];
            for (std::size_t j = 0; j < n(); ++j) {
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            }
            b[i] -= f * b[r];
        }
        basis[r] = c;
    }

    // Minimizes cost over columns allowed[j]; returns false if unbounded.
    bool optimize(const std::vector<Rat>& cost, const std::vector<bool>& allowed) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < n() && !enter; ++j) {
                if (!allowed[j]) continue;
                Rat reduced = cost[j];
                for (std::size_t i = 0; i < m(); ++i) {
                    if (!a[i][j].is_zero()) reduced -= cost[basis[i]] * a[i][j];
                }
                if (reduced.sign() < 0) enter = j;
            }
            if (!enter) return true;
            const std::size_t c = *enter;
            std::optional<std::size_t> leave;
            Rat best;
            for (std::size_t i = 0; i < m(); ++i) {
                if (a[i][c].sign() <= 0) continue;
                const Rat ratio = b[i] / a[i][c];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, c);
        }
    }
};

}  // namespace

Solution solve(const Program& p) {
    const std::size_t m = p.rows.size();
    const std::size_t nv = static_cast<std::size_t>(p.vars);
    if (p.cost.size() != nv || p.sense.size() != m || p.rhs.size() != m) {
        throw Error(ErrorKind::BadParams, "inconsistent linear program");
    }

    // Columns: structural, one slack/surplus per inequality, one artificial per row that needs it.
    std::size_t n_slack = 0;
    for (auto s : p.sense) n_slack += s != Sense::Eq;
    Tableau t;
    std::vector<std::size_t> artificial_rows;
    std::vector<std::vector<Rat>> rows(m);
    std::vector<Rat> rhs(m);
    std::vector<std::optional<std::size_t>> basic_slack(m);
    std::size_t slack = nv;
    for (std::size_t i = 0; i < m; ++i) {
        rows[i] = p.rows[i];
        rhs[i] = p.rhs[i];
        rows[i].resize(nv + n_slack);
        Sense s = p.sense[i];
        if (s != Sense::Eq) {
            rows[i][slack] = Rat(s == Sense::Le ? 1 : -1);
            ++slack;
        }
        if (rhs[i].sign() < 0) {
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            if (s == Sense::Le) s = Sense::Ge;
            else if (s == Sense::Ge) s = Sense::Le;
        }
        if (s == Sense::Le) basic_slack[i] = slack - 1;
    }
    const std::size_t n_art = static_cast<std::size_t>(std::count_if(
        basic_slack.begin(), basic_slack.end(), [](const auto& v) { return !v.has_value(); }));
    const std::size_t n = nv + n_slack + n_art;
    std::size_t art = nv + n_slack;
    t.a.resize(m);
    t.b = rhs;
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        t.a[i] = std::move(rows[i]);
        t.a[i].resize(n);
        if (basic_slack[i]) {
            t.basis[i] = *basic_slack[i];
        } else {
            t.a[i][art] = Rat(1);
            t.basis[i] = art++;
        }
    }

    std::vector<bool> allowed(n, true);
    if (n_art > 0) {
        std::vector<Rat> phase1(n);
        for (std::size_t j = nv + n_slack; j < n; ++j) phase1[j] = Rat(1);
        t.optimize(phase1, allowed);
        Rat infeas;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] >= nv + n_slack) infeas += t.b[i];
        }
        if (infeas.sign() > 0) return Solution{Status::Infeasible, {}, {}};
        // Drive zero-valued artificials out of the basis; drop rows that are redundant.
        for (std::size_t i = 0; i < t.m();) {
            if (t.basis[i] < nv + n_slack) { ++i; continue; }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < nv + n_slack && !col; ++j) {
                if (!t.a[i][j].is_zero()) col = j;
            }
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
                t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (std::size_t j = nv + n_slack; j < n; ++j) allowed[j] = false;
    }

    std::vector<Rat> cost(n);
    for (std::size_t j = 0; j < nv; ++j) cost[j] = p.cost[j];
    if (!t.optimize(cost, allowed)) return Solution{Status::Unbounded, {}, {}};

    Solution out{Status::Optimal, std::vector<Rat>(nv), Rat(0)};
    for (std::size_t i = 0; i < t.m(); ++i) {
        if (t.basis[i] < nv) out.x[t.basis[i]] = t.b[i];
    }
    for (std::size_t j = 0; j < nv; ++j) out.value += p.cost[j] * out.x[j];
    return out;
}

}  // namespace polarmin::lp
