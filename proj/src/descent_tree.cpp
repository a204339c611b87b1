#include "dioph/descent_tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <thread>

#include "parallel.hpp"

namespace dioph {

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Quad base_even() { return {Int(0), Int(0), Int(0), Int(-2)}; }
Quad base_odd() { return {Int(0), Int(0), Int(1), Int(-1)}; }
Quad base_of(Parity p) { return p == Parity::Even ? base_even() : base_odd(); }

namespace {

Quad sorted(Quad q) {
    std::sort(q.begin(), q.end());
    return q;
}

bool same_multiset(const Quad& x, const Quad& y) { return sorted(x) == sorted(y); }

int count_negative(const Quad& q) {
    return static_cast<int>(std::count_if(q.begin(), q.end(), [](const Int& v) { return v < 0; }));
}

}  // namespace

Quad descent_parent(const Quad& s) {
    Int nv = other_root(s, 3);
    if (nv < 0) {
        return {s[0], s[1], s[2], std::move(nv)};
    }
    return sorted({s[0], s[1], s[2], std::move(nv)});
}

DescentCertificate descend(const Quad& q) {
    if (eval_P(q) != 0) {
        throw PreconditionError("descend: " + to_string(q) + " is not a solution of P = 0");
    }
    const int negatives = count_negative(q);
    if (negatives > 1) {
        throw PreconditionError("descend: " + to_string(q) + " has more than one negative element");
    }

    DescentCertificate cert;
    cert.start = q;
    if (negatives == 1) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
            if (same_multiset(q, base_of(p))) {
                cert.terminal = base_of(p);
                cert.parity = p;
                return cert;
            }
        }
        throw InvariantError("descend: solution " + to_string(q) +
                             " with one negative element is not a base");
    }

    Quad cur = sorted(q);
    for (;;) {
        Int nv = other_root(cur, 3);
        cert.steps.push_back({cur, 3, nv});
        if (nv < 0) {
            cert.terminal = {cur[0], cur[1], cur[2], std::move(nv)};
            break;
        }
        Quad next = sorted({cur[0], cur[1], cur[2], std::move(nv)});
        if (next[3] >= cur[3]) {
            throw InvariantError("descend: no decrease at " + to_string(cur));
        }
        cur = std::move(next);
    }

    if (cert.terminal == base_even()) {
        cert.parity = Parity::Even;
    } else if (cert.terminal == base_odd()) {
        cert.parity = Parity::Odd;
    } else {
        throw InvariantError("descend: chain ended at " + to_string(cert.terminal));
    }
    return cert;
}

bool verify_certificate(const DescentCertificate& cert) {
    if (cert.terminal != base_of(cert.parity)) {
        return false;
    }
    if (cert.steps.empty()) {
        return same_multiset(cert.start, cert.terminal);
    }
    if (sorted(cert.start) != cert.steps.front().tuple) {
        return false;
    }
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        const Quad& t = step.tuple;
        if (step.index != 3 || sorted(t) != t || t[0] < 0 || eval_P(t) != 0) {
            return false;
        }
        if (other_root(t, 3) != step.new_value) {
            return false;
        }
        const bool last = i + 1 == cert.steps.size();
        if (last) {
            Quad end{t[0], t[1], t[2], step.new_value};
            if (step.new_value >= 0 || end != cert.terminal) {
                return false;
            }
        } else {
            const Quad next = sorted({t[0], t[1], t[2], step.new_value});
            if (step.new_value < 0 || next != cert.steps[i + 1].tuple || next[3] >= t[3]) {
                return false;
            }
        }
    }
    return true;
}

bool descent_bound_check(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (a < 0 || a > b || b > c || c > d) {
        return false;
    }
    const Quad q{a, b, c, d};
    if (eval_P(q) != 0) {
        return false;
    }
    const Int d_other = other_root(q, 3);
    const bool product_ok = d * d_other == (c - a - b) * (c - a - b) - 4 * (a * b + 1);
    const bool below_c = !(d >= c) || d_other < c;
    return product_ok && below_c;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("DIOPH_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TreeNode> enumerate_tree(const Int& max_element, Parity parity,
                                     const EnumerateOptions& opts) {
    const unsigned workers = resolve_workers(opts.workers);
    std::vector<TreeNode> out;
    Quad start = parity == Parity::Even ? Quad{Int(0), Int(0), Int(0), Int(2)}
                                        : Quad{Int(0), Int(0), Int(1), Int(3)};
    if (start[3] > max_element) {
        return out;
    }

    std::vector<TreeNode> frontier{{std::move(start), 1}};
    while (!frontier.empty()) {
        std::vector<std::vector<TreeNode>> parts(workers);
        detail::for_chunks(frontier.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
            auto& part = parts[w];
            for (std::size_t k = begin; k < end; ++k) {
                const Quad& x = frontier[k].tuple;
                for (std::size_t i = 0; i < 4; ++i) {
                    // Equal values give the same child.
                    if (i > 0 && x[i] == x[i - 1]) continue;
                    Int v = other_root(x, i);
                    if (v <= x[i] || v > max_element) continue;
                    Quad child = x;
                    child[i] = std::move(v);
                    part.push_back({sorted(std::move(child)), frontier[k].depth + 1});
                }
            }
        });
        for (auto& node : frontier) {
            out.push_back(std::move(node));
        }
        frontier.clear();
        for (auto& part : parts) {
            std::move(part.begin(), part.end(), std::back_inserter(frontier));
        }
    }

    std::sort(out.begin(), out.end(),
              [](const TreeNode& l, const TreeNode& r) { return l.tuple < r.tuple; });
    const auto dup = std::adjacent_find(out.begin(), out.end(), [](const TreeNode& l, const TreeNode& r) {
        return l.tuple == r.tuple;
    });
    if (dup != out.end()) {
        throw InvariantError("enumerate_tree: node " + to_string(dup->tuple) + " reached twice");
    }
    return out;
}

Parity parity_of(const Quad& q) {
    for (const auto& v : q) {
        if (boost::multiprecision::bit_test(boost::multiprecision::abs(v), 0)) {
            return Parity::Odd;
        }
    }
    return Parity::Even;
}

namespace {

struct Double {
    Int a;
    Int b;
};

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    using u128 = unsigned __int128;
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Every positive quadruple descends to a regular triple (a, b, a+b+2r)
// extended upward, and that extension exceeds 4ab^2. So only doubles with
// 4ab^2 <= bound can seed anything.
std::vector<Double> seed_doubles(const Int& bound) {
    std::vector<Double> out;
    if (bound <= std::numeric_limits<std::int64_t>::max()) {
        using u128 = unsigned __int128;
        const auto n = static_cast<std::uint64_t>(bound);
        for (std::uint64_t a = 1; 4 * static_cast<u128>(a) * (a + 1) * (a + 1) <= n; ++a) {
            for (std::uint64_t b = a + 1; 4 * static_cast<u128>(a) * b * b <= n; ++b) {
                const std::uint64_t m = a * b + 1;
                const std::uint64_t r = isqrt_u64(m);
                if (r * r == m) {
                    out.push_back({Int(a), Int(b)});
                }
            }
        }
        return out;
    }
    for (Int a = 1; 4 * a * (a + 1) * (a + 1) <= bound; ++a) {
        for (Int b = a + 1; 4 * a * b * b <= bound; ++b) {
            if (int_sqrt(a * b + 1).exact) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Quad> enumerate_quadruples(const Int& bound, const EnumerateOptions& opts) {
    std::vector<Quad> seeds;
    for (const auto& [a, b] : seed_doubles(bound)) {
        const Int r = int_sqrt(a * b + 1).root;
        const Int c = a + b + 2 * r;
        auto ext = ahs_extend(a, b, c);
        if (ext.upper <= bound) {
            seeds.push_back({a, b, c, std::move(ext.upper)});
        }
    }

    const unsigned workers = resolve_workers(opts.workers);
    std::vector<std::vector<Quad>> parts(workers);
    detail::for_chunks(seeds.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& part = parts[w];
        std::vector<Quad> stack(seeds.begin() + static_cast<std::ptrdiff_t>(begin),
                                seeds.begin() + static_cast<std::ptrdiff_t>(end));
        while (!stack.empty()) {
            Quad q = std::move(stack.back());
            stack.pop_back();
            for (std::size_t i = 0; i < 3; ++i) {
                Int v = other_root(q, i);
                if (v > bound) continue;
                Quad child = q;
                child[i] = std::move(v);
                stack.push_back(sorted(std::move(child)));
            }
            part.push_back(std::move(q));
        }
    });

    std::vector<Quad> out;
    for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw InvariantError("enumerate_quadruples: duplicate quadruple");
    }
    return out;
}

Quad irregular_triple_to_regular_quad(const Int& a, const Int& b, const Int& c) {
    if (!(0 < a && a < b && b < c)) {
        throw PreconditionError("irregular_triple_to_regular_quad: needs 0 < a < b < c");
    }
    const auto ext = ahs_extend(a, b, c);
    if (ext.lower == 0) {
        throw RegularInputError("irregular_triple_to_regular_quad: (" + to_string(a) + ", " +
                                to_string(b) + ", " + to_string(c) + ") is a regular triple");
    }
    if (!(0 < ext.lower && ext.lower < c)) {
        throw InvariantError("irregular_triple_to_regular_quad: d_lower " + to_string(ext.lower) +
                             " outside (0, c)");
    }
    return sorted({a, b, c, ext.lower});
}

namespace {

std::map<Int, std::vector<Quad>> group_by_max(const std::vector<Quad>& quads) {
    std::map<Int, std::vector<Quad>> groups;
    for (const auto& q : quads) {
        groups[q[3]].push_back(q);
    }
    return groups;
}

bool holds(const Quad& q, const Int& v) { return q[0] == v || q[1] == v || q[2] == v; }

}  // namespace

std::vector<SharedMaxPair> find_shared_max(const Int& bound, const EnumerateOptions& opts) {
    std::vector<SharedMaxPair> out;
    for (auto& [d, group] : group_by_max(enumerate_quadruples(bound, opts))) {
        std::sort(group.begin(), group.end());
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                out.push_back({group[i], group[j]});
            }
        }
    }
    return out;
}

std::vector<ThreeSystem> find_three_system(const Int& bound, const EnumerateOptions& opts) {
    std::vector<ThreeSystem> out;
    for (auto& [d, group] : group_by_max(enumerate_quadruples(bound, opts))) {
        if (group.size() < 3) continue;
        std::vector<Int> smaller;
        for (const auto& q : group) {
            smaller.insert(smaller.end(), q.begin(), q.begin() + 3);
        }
        std::sort(smaller.begin(), smaller.end());
        smaller.erase(std::unique(smaller.begin(), smaller.end()), smaller.end());

        // The quadruple holding x and y but not z, if any. P(x, y, ., d) has at
        // most one root below d, so it is unique.
        auto find = [&](const Int& x, const Int& y, const Int& z) -> const Quad* {
            for (const auto& q : group) {
                if (holds(q, x) && holds(q, y) && !holds(q, z)) return &q;
            }
            return nullptr;
        };
        auto third = [](const Quad& q, const Int& x, const Int& y) {
            for (std::size_t i = 0; i < 3; ++i) {
                if (q[i] != x && q[i] != y) return q[i];
            }
            throw InvariantError("find_three_system: no third element");
        };

        const std::size_t n = smaller.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    const Int& a = smaller[i];
                    const Int& b = smaller[j];
                    const Int& c = smaller[k];
                    const Quad* q1 = find(a, b, c);
                    const Quad* q2 = q1 ? find(a, c, b) : nullptr;
                    const Quad* q3 = q2 ? find(b, c, a) : nullptr;
                    if (!q3) continue;
                    ThreeSystem sys{*q1, *q2, *q3, {a, b, c, d},
                                    {third(*q3, b, c), third(*q2, a, c), third(*q1, a, b)}};
                    if (!is_diophantine(Tuple::from_quad(sys.shared)).ok) {
                        throw InvariantError("find_three_system: " + to_string(sys.shared) +
                                             " is not a Diophantine quadruple");
                    }
                    out.push_back(std::move(sys));
                }
            }
        }
    }
    return out;
}

ThreeSystem system_from_irregular(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (!(0 < a && a < b && b < c && c < d)) {
        throw PreconditionError("system_from_irregular: needs 0 < a < b < c < d");
    }
    const Quad shared{a, b, c, d};
    const auto check = is_diophantine(Tuple::from_quad(shared));
    if (!check.ok) {
        throw PreconditionError("system_from_irregular: not a Diophantine quadruple: " + check.reason);
    }
    if (eval_P(shared) == 0) {
        throw RegularInputError("system_from_irregular: " + to_string(shared) + " is regular");
    }
    // c' = a + b + d + 2abd - 2 sqrt((ab+1)(ad+1)(bd+1)), the lower AHS root.
    Int c_primed = ahs_extend(a, b, d).lower;
    Int b_primed = ahs_extend(a, c, d).lower;
    Int a_primed = ahs_extend(b, c, d).lower;
    if (a_primed <= 0 || b_primed <= 0 || c_primed <= 0) {
        throw InvariantError("system_from_irregular: non-positive primed element");
    }
    ThreeSystem sys{sorted({a, b, c_primed, d}), sorted({a, b_primed, c, d}), sorted({a_primed, b, c, d}),
                    shared, {a_primed, b_primed, c_primed}};
    for (const Quad* q : {&sys.q1, &sys.q2, &sys.q3}) {
        if (eval_P(*q) != 0) {
            throw InvariantError("system_from_irregular: " + to_string(*q) + " is not regular");
        }
    }
    return sys;
}

}  // namespace dioph
