#include "rectiplan/spirality.hpp"

#include <algorithm>
#include <sstream>

#include "rectiplan/errors.hpp"

namespace rectiplan {

spirality_set empty_set() { return {0, -1, 1}; }

spirality_set make_set(int lo, int hi, int jump) {
    bool ok = false;
    if (jump == 1) {
        if (lo == 0 && hi >= 0) ok = true;
        if (lo == 1 && (hi == 1 || hi == 2)) ok = true;
    } else if (jump == 2) {
        if (lo == 0 && hi >= 2 && hi % 2 == 0) ok = true;
        if (lo == 1 && hi >= 3 && hi % 2 == 1) ok = true;
    }
    if (!ok) {
        std::ostringstream os;
        os << "set outside the six canonical shapes: [" << lo << "," << hi
           << "]^" << jump;
        throw internal_error(os.str());
    }
    return {lo, hi, jump};
}

bool contains(const spirality_set& s, int sigma) {
    if (s.empty()) return false;
    int a = sigma < 0 ? -sigma : sigma;
    return a >= s.lo && a <= s.hi && (a - s.lo) % s.jump == 0;
}

std::string to_string(const spirality_set& s) {
    if (s.empty()) return "[]";
    std::ostringstream os;
    if (s.lo == s.hi) {
        os << "[" << s.lo << "]";
    } else {
        os << "[" << s.lo << "," << s.hi << "]^" << s.jump;
    }
    return os.str();
}

spirality_set qstar_set(int len) {
    if (len < 1) throw internal_error("chain of length zero");
    return {0, len - 1, 1};
}

// =====================================================================
// series composition
// =====================================================================

namespace {

void tally(series_summary& s, const spirality_set& c, int d) {
    if (c.empty()) {
        s.empty_count += d;
        return;
    }
    if (c.lo == 0 && c.hi == 0) s.x += d;
    if (c.lo == 1 && c.hi == 2 && c.jump == 1) s.y += d;
    if (c.lo < c.hi && c.jump == 1) s.z += d;
    s.mtot += d * c.hi;
}

}  // namespace

series_summary s_summary(const std::vector<spirality_set>& children) {
    series_summary s;
    for (const auto& c : children) {
        tally(s, c, +1);
        ++s.n;
    }
    return s;
}

series_summary s_summary_replace(series_summary s, const spirality_set& removed,
                                 const spirality_set& added) {
    tally(s, removed, -1);
    tally(s, added, +1);
    return s;
}

series_summary s_summary_remove(series_summary s, const spirality_set& removed) {
    if (s.n < 1) throw internal_error("removing from an exhausted summary");
    tally(s, removed, -1);
    --s.n;
    return s;
}

series_summary s_summary_add(series_summary s, const spirality_set& added) {
    tally(s, added, +1);
    ++s.n;
    return s;
}

series_summary s_summary_merge(const series_summary& a, const series_summary& b) {
    series_summary s;
    s.x = a.x + b.x;
    s.y = a.y + b.y;
    s.z = a.z + b.z;
    s.mtot = a.mtot + b.mtot;
    s.n = a.n + b.n;
    s.empty_count = a.empty_count + b.empty_count;
    return s;
}

spirality_set s_node_set(const series_summary& s) {
    if (s.any_empty()) return empty_set();
    int M = s.mtot;
    if (s.z > 0) {
        if (M != 2) return make_set(0, M, 1);
        // M == 2 with a flexible child: a lone [1,2]^1 among [0]s keeps
        // its gap at zero, anything else fills the interval
        if (s.x + s.y == s.n && s.y == 1) return make_set(1, 2, 1);
        return make_set(0, 2, 1);
    }
    // all children are singletons or stride-2: parity is preserved
    if (M <= 1) return make_set(M, M, 1);
    if (M % 2 == 1) return make_set(1, M, 2);
    return make_set(0, M, 2);
}

// =====================================================================
// parallel composition
// =====================================================================

bool p3_admits(const spirality_set& a, const spirality_set& b,
               const spirality_set& c, int sigma) {
    const spirality_set* s[3] = {&a, &b, &c};
    static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perm) {
        if (contains(*s[p[0]], sigma + 2) && contains(*s[p[1]], sigma) &&
            contains(*s[p[2]], sigma - 2))
            return true;
    }
    return false;
}

namespace {

// Shared by p2_set and p3_set: the largest admitted value when it does
// not exceed 4, found by direct probing.  Returns -1 for larger maxima.
template <typename Adm>
int probed_max(const Adm& adm) {
    for (int i = 0; i <= 4; ++i)
        if (adm(i) && !adm(i + 1) && !adm(i + 2)) return i;
    return -1;
}

template <typename Adm>
spirality_set shape_from_probes(const Adm& adm, int M) {
    bool stride1 = (adm(0) && adm(1)) || (adm(1) && adm(2));
    if (stride1) {
        if (adm(0)) return make_set(0, M, 1);
        if (M != 2)
            throw internal_error("stride-1 set missing zero has max != 2");
        return make_set(1, 2, 1);
    }
    if (M <= 1) return make_set(M, M, 1);
    if (M % 2 == 1) return make_set(1, M, 2);
    return make_set(0, M, 2);
}

}  // namespace

spirality_set p3_set(const spirality_set& a, const spirality_set& b,
                     const spirality_set& c) {
    auto adm = [&](int sigma) { return p3_admits(a, b, c, sigma); };
    if (!adm(0) && !adm(1)) return empty_set();
    int M = probed_max(adm);
    if (M < 0) {
        int m[3] = {a.hi, b.hi, c.hi};
        std::sort(m, m + 3);
        M = std::min({m[2] - 2, m[1], m[0] + 2});
        if (!adm(M)) --M;
        if (!adm(M)) throw internal_error("three-way parallel maximum misjudged");
    }
    return shape_from_probes(adm, M);
}

bool p2_admits(const spirality_set& l, const spirality_set& r, int sigma) {
    static const int pole[3][2] = {{0, 1}, {1, 0}, {1, 1}};
    for (int flip = 0; flip < 2; ++flip) {
        const spirality_set& L = flip ? r : l;
        const spirality_set& R = flip ? l : r;
        for (const auto& au : pole) {
            for (const auto& av : pole) {
                if (contains(L, sigma + au[0] + av[0]) &&
                    contains(R, sigma - au[1] - av[1]))
                    return true;
            }
        }
    }
    return false;
}

spirality_set p2_set(const spirality_set& l, const spirality_set& r) {
    auto adm = [&](int sigma) { return p2_admits(l, r, sigma); };
    if (!adm(0) && !adm(1)) return empty_set();
    int M = probed_max(adm);
    if (M < 0) {
        int mmax = std::max(l.hi, r.hi);
        int mmin = std::min(l.hi, r.hi);
        if (mmax >= mmin + 2) {
            M = mmin + 2;
        } else {
            M = adm(mmax) ? mmax : mmax - 1;
        }
        if (!adm(M)) throw internal_error("two-way parallel maximum misjudged");
    }
    return shape_from_probes(adm, M);
}

bool root_feasible(const spirality_set& s, int len) {
    for (int sigma = 0; sigma <= 4; ++sigma)
        if (contains(s, sigma) && 4 - sigma <= len - 1) return true;
    return false;
}

}  // namespace rectiplan
