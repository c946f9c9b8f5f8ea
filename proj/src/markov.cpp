#include "tricolor/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tricolor {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

std::vector<std::vector<int>> signed_axis_maps(int d) {
    // Each entry lists (axis image, sign) pairs as axis[k] and sign[k] packed: 2k, 2k+1.
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        for (int mask = 0; mask < (1 << d); ++mask) {
            std::vector<int> m(2 * d);
            for (int k = 0; k < d; ++k) {
                m[2 * k] = perm[k];
                m[2 * k + 1] = (mask >> k) & 1 ? -1 : 1;
            }
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Vertex permutations realising the geometric symmetries of the lattice.
std::vector<std::vector<Vertex>> lattice_symmetries(const Lattice& lat) {
    const int d = lat.dim();
    const int n = lat.spec().n;
    std::vector<std::vector<int>> shifts;
    if (lat.is_torus()) {
        long long total = 1;
        for (int k = 0; k < d; ++k) total *= n;
        for (long long t = 0; t < total; ++t) {
            std::vector<int> s(d);
            long long rem = t;
            for (int k = d - 1; k >= 0; --k) {
                s[k] = static_cast<int>(rem % n);
                rem /= n;
            }
            shifts.push_back(std::move(s));
        }
    } else {
        shifts.emplace_back(d, 0);
    }
    std::vector<std::vector<Vertex>> out;
    std::vector<int> c(d);
    for (const auto& m : signed_axis_maps(d)) {
        for (const auto& s : shifts) {
            std::vector<Vertex> perm(lat.size());
            bool ok = true;
            for (Vertex v = 0; v < lat.size() && ok; ++v) {
                auto x = lat.coords(v);
                for (int k = 0; k < d; ++k) {
                    int y = m[2 * k + 1] * x[m[2 * k]] + s[k];
                    if (lat.is_torus()) y = ((y % n) + n) % n;
                    c[k] = y;
                }
                auto w = lat.find(c);
                if (!w) ok = false;
                else perm[v] = *w;
            }
            for (const Edge& e : lat.edges())
                if (ok && !lat.adjacent(perm[e.u], perm[e.v])) ok = false;
            if (ok) out.push_back(std::move(perm));
        }
    }
    return out;
}

std::vector<std::vector<int>> color_permutations(int q) {
    std::vector<int> p(q);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Per-start TV history, indexed by t.
struct StartTrace {
    std::vector<double> tv;
    long long hit = -1;  // first t with TV <= 1/e
    bool ambiguous = false;
};

StartTrace exact_trace(const Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor>& kt, std::int64_t denom, int start,
                       long long max_iterations) {
    const int n = static_cast<int>(kt.rows());
    std::vector<BigInt> u(n, 0), next(n, 0);
    u[start] = 1;
    BigInt dt = 1;
    BigInt s = 0;
    BigInt term;
    StartTrace tr;
    for (long long t = 0;; ++t) {
        // S = sum_y |N u(y) - D^t|;  TV = S / (2 N D^t).
        s = 0;
        for (int y = 0; y < n; ++y) {
            term = u[y] * n - dt;
            if (term < 0) term = -term;
            s += term;
        }
        const BigInt scale = dt * (2 * n);
        const Rational tv(s, scale);
        tr.tv.push_back(to_double(tv));
        if (at_most_inverse_e(tv)) {
            tr.hit = t;
            return tr;
        }
        if (t >= max_iterations) return tr;
        for (int y = 0; y < n; ++y) {
            mpz_set_ui(next[y].backend().data(), 0);
            for (Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor>::InnerIterator it(kt, y); it; ++it)
                mpz_addmul_ui(next[y].backend().data(), u[it.col()].backend().data(),
                              static_cast<unsigned long>(it.value()));
        }
        u.swap(next);
        dt *= denom;
    }
}

StartTrace float_trace(const Eigen::SparseMatrix<double, Eigen::RowMajor>& pt, int start, long long max_iterations) {
    const int n = static_cast<int>(pt.rows());
    constexpr double kBudgetPerStep = 1e-12;
    const double inv_e = std::exp(-1.0);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    u[start] = 1.0;
    StartTrace tr;
    for (long long t = 0;; ++t) {
        const double tv = 0.5 * (u.array() - 1.0 / n).abs().sum();
        tr.tv.push_back(tv);
        const double budget = kBudgetPerStep * static_cast<double>(t + 1);
        if (tv <= inv_e) {
            if (tv > inv_e - budget) tr.ambiguous = true;
            tr.hit = t;
            return tr;
        }
        if (tv <= inv_e + budget) tr.ambiguous = true;
        if (t >= max_iterations) return tr;
        Eigen::VectorXd next = pt * u;
        u.swap(next);
    }
}

}  // namespace

Eigen::SparseMatrix<double, Eigen::RowMajor> TransitionMatrix::to_double() const {
    Eigen::SparseMatrix<double, Eigen::RowMajor> out = numer.cast<double>();
    out /= static_cast<double>(denominator);
    return out;
}

TransitionMatrix transition_matrix(const StateSpace& states, const MatrixLimits& limits) {
    const int n = states.size();
    if (n > limits.max_states)
        fail(ErrorCode::CapExceeded, "transition matrix refused: " + std::to_string(n) + " states exceeds " +
                                         std::to_string(limits.max_states));
    const Graph& g = states.graph();
    const int q = states.q();
    TransitionMatrix p;
    p.denominator = static_cast<std::int64_t>(q) * g.vertex_count;
    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    std::vector<std::uint8_t> buf(g.vertex_count);
    for (int i = 0; i < n; ++i) {
        auto x = states.state(i);
        std::copy(x.begin(), x.end(), buf.begin());
        std::int64_t legal = 0;
        for (Vertex v = 0; v < g.vertex_count; ++v) {
            for (int j = 0; j < q; ++j) {
                if (j == x[v]) continue;
                bool ok = true;
                for (Vertex w : g.neighbors(v))
                    if (x[w] == j) ok = false;
                if (!ok) continue;
                buf[v] = static_cast<std::uint8_t>(j);
                // Recolourings that break the boundary condition leave the state space.
                if (auto k = states.index_of(buf)) {
                    triplets.emplace_back(i, *k, 1);
                    ++legal;
                }
                buf[v] = x[v];
            }
        }
        triplets.emplace_back(i, i, p.denominator - legal);
    }
    p.numer.resize(n, n);
    p.numer.setFromTriplets(triplets.begin(), triplets.end());
    p.numer.makeCompressed();
    return p;
}

MatrixChecks check_matrix(const TransitionMatrix& p) {
    const int n = p.size();
    MatrixChecks c;
    c.symmetric = true;
    std::vector<std::int64_t> col(n, 0);
    bool rows_ok = true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
        std::int64_t row = 0;
        for (decltype(p.numer)::InnerIterator it(p.numer, i); it; ++it) {
            if (it.value() < 0) rows_ok = false;
            row += it.value();
            col[it.col()] += it.value();
            if (it.col() != i && it.value() != 0) {
                if (p.numer.coeff(it.col(), i) != it.value()) c.symmetric = false;
                const int a = find_root(parent, i);
                const int b = find_root(parent, static_cast<int>(it.col()));
                if (a != b) parent[a] = b;
            }
        }
        if (row != p.denominator) rows_ok = false;
    }
    c.stochastic = rows_ok;
    c.uniform_stationary = std::all_of(col.begin(), col.end(), [&](std::int64_t s) { return s == p.denominator; });
    for (int i = 0; i < n; ++i)
        if (find_root(parent, i) == i) ++c.components;
    c.connected = c.components == 1;
    return c;
}

std::vector<int> orbit_representatives(const StateSpace& states) {
    const int n = states.size();
    std::vector<int> reps;
    if (states.constrained() || !states.has_lattice()) {
        reps.resize(n);
        std::iota(reps.begin(), reps.end(), 0);
        return reps;
    }
    const auto vperms = lattice_symmetries(states.lattice());
    const auto cperms = color_permutations(states.q());
    std::vector<char> seen(n, 0);
    std::vector<std::uint8_t> img(states.vertex_count());
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        reps.push_back(i);
        auto x = states.state(i);
        for (const auto& vp : vperms)
            for (const auto& cp : cperms) {
                for (int v = 0; v < states.vertex_count(); ++v) img[vp[v]] = static_cast<std::uint8_t>(cp[x[v]]);
                auto k = states.index_of(img);
                if (!k) fail(ErrorCode::PropertyViolation, "symmetry image of a state is missing from the state space");
                seen[*k] = 1;
            }
    }
    return reps;
}

MixingResult tv_mixing_time(const TransitionMatrix& p, const StateSpace& states, const MixingOptions& options) {
    const int n = p.size();
    require(n == states.size() && n > 0, "matrix and state space disagree");
    MixingResult r;
    std::vector<int> starts;
    if (options.use_symmetry) {
        starts = orbit_representatives(states);
        r.symmetry_reduced = static_cast<int>(starts.size()) < n;
    } else {
        starts.resize(n);
        std::iota(starts.begin(), starts.end(), 0);
    }
    r.starts = static_cast<int>(starts.size());
    r.exact = n <= options.exact_state_cap;

    std::vector<StartTrace> traces(starts.size());
    if (r.exact) {
        Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor> kt = p.numer.transpose();
        kt.makeCompressed();
        parallel_for(starts.size(), options.threads, [&](std::size_t k) {
            traces[k] = exact_trace(kt, p.denominator, starts[k], options.max_iterations);
        });
    } else {
        Eigen::SparseMatrix<double, Eigen::RowMajor> pt = p.to_double().transpose();
        parallel_for(starts.size(), options.threads, [&](std::size_t k) {
            traces[k] = float_trace(pt, starts[k], options.max_iterations);
        });
    }

    long long first_all = -1;
    for (std::size_t k = 0; k < traces.size(); ++k) {
        if (traces[k].hit < 0)
            fail(ErrorCode::CapExceeded, "mixing-time iteration did not reach 1/e within " +
                                             std::to_string(options.max_iterations) + " steps");
        if (traces[k].ambiguous) r.decided = false;
        if (traces[k].hit > first_all) {
            first_all = traces[k].hit;
            r.worst_start = starts[k];
        }
    }
    r.tau = std::max<long long>(0, first_all - 1);
    auto tv_at = [&](long long t) {
        double m = 0.0;
        for (const auto& tr : traces) {
            const auto idx = static_cast<std::size_t>(std::min<long long>(t, static_cast<long long>(tr.tv.size()) - 1));
            m = std::max(m, tr.tv[idx]);
        }
        return m;
    };
    r.tv_at_tau = tv_at(r.tau);
    r.tv_after_tau = tv_at(r.tau + 1);
    if (!r.exact) r.error_budget = 1e-12 * static_cast<double>(r.tau + 2);
    return r;
}

ConductanceReport conductance_bound(const StateSpace& states, const Rational& rho, std::optional<long long> tau) {
    const Lattice& lat = states.lattice();
    require(lat.is_torus(), "imbalance classes are defined on tori");
    long long a = 0, m = 0, o = 0;
    for (int i = 0; i < states.size(); ++i) {
        auto x = states.state(i);
        int imb = 0;
        for (Vertex v = 0; v < lat.size(); ++v)
            if (x[v] == 0) imb += lat.is_even(v) ? 1 : -1;
        switch (classify(imb, rho, lat.size())) {
        case ImbalanceClass::EvenHeavy: ++a; break;
        case ImbalanceClass::OddHeavy: ++o; break;
        case ImbalanceClass::Balanced: ++m; break;
        }
    }
    const long long total = states.size();
    ConductanceReport r;
    r.pi_a = Rational(a, total);
    r.pi_odd = Rational(o, total);
    r.pi_m = Rational(m, total);
    r.pi_a_at_most_half = 2 * a <= total;
    r.classes_symmetric = a == o;
    if (m > 0) r.bound = r.pi_a / (8 * r.pi_m);
    r.tau = tau;
    if (tau) r.bound_holds = !r.bound || Rational(*tau) >= *r.bound;
    if (tau && !r.bound) r.bound_holds = false;  // an infinite bound can never be met
    return r;
}

BlockingReport single_site_blocking(const StateSpace& states, const TransitionMatrix& p, const Rational& rho) {
    const Lattice& lat = states.lattice();
    require(lat.is_torus(), "imbalance classes are defined on tori");
    const int n = states.size();
    std::vector<int> imb(n, 0);
    std::vector<ImbalanceClass> cls(n);
    for (int i = 0; i < n; ++i) {
        auto x = states.state(i);
        for (Vertex v = 0; v < lat.size(); ++v)
            if (x[v] == 0) imb[i] += lat.is_even(v) ? 1 : -1;
        cls[i] = classify(imb[i], rho, lat.size());
    }
    BlockingReport r;
    for (int i = 0; i < n; ++i)
        for (decltype(p.numer)::InnerIterator it(p.numer, i); it; ++it) {
            const int j = static_cast<int>(it.col());
            if (j == i || it.value() == 0) continue;
            ++r.moves;
            if (cls[i] == ImbalanceClass::EvenHeavy && cls[j] == ImbalanceClass::OddHeavy) ++r.even_to_odd;
            r.max_imbalance_change = std::max(r.max_imbalance_change, std::abs(imb[i] - imb[j]));
        }
    return r;
}

}  // namespace tricolor
