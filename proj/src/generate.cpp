#include "mopdom/generate.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace mopdom {

using boost::multiprecision::cpp_int;

namespace {

// catalan(i) = number of triangulations of a polygon with i+2 vertices
std::vector<cpp_int> catalan_table(int upto) {
    std::vector<cpp_int> c(upto + 1);
    c[0] = 1;
    for (int i = 1; i <= upto; ++i)
        c[i] = c[i - 1] * 2 * (2 * i - 1) / (i + 1);
    return c;
}

void enum_rec(int n, std::vector<std::pair<int, int>>& segs,
              std::vector<std::pair<int, int>>& diags,
              const std::function<void(const Mop&)>& emit) {
    if (segs.empty()) {
        Mop m;
        m.n = n;
        m.diagonals = diags;
        normalize(m);
        emit(m);
        return;
    }
    auto [a, b] = segs.back();
    segs.pop_back();
    for (int c = a + 1; c < b; ++c) {
        size_t seg_mark = segs.size(), diag_mark = diags.size();
        if (c - a >= 2) {
            diags.push_back({a, c});
            segs.push_back({a, c});
        }
        if (b - c >= 2) {
            diags.push_back({c, b});
            segs.push_back({c, b});
        }
        enum_rec(n, segs, diags, emit);
        segs.resize(seg_mark);
        diags.resize(diag_mark);
    }
    segs.push_back({a, b});
}

}  // namespace

void enumerate_triangulations(int n, const std::function<void(const Mop&)>& emit) {
    if (n < 3 || n > 16)
        throw std::invalid_argument("enumerate_triangulations: n must be in [3,16]");
    std::vector<std::pair<int, int>> segs{{0, n - 1}}, diags;
    enum_rec(n, segs, diags, emit);
}

std::vector<Mop> all_triangulations(int n) {
    std::vector<Mop> out;
    enumerate_triangulations(n, [&](const Mop& m) { out.push_back(m); });
    return out;
}

std::string CanonicalCode::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < code.size(); ++i) os << (i ? "." : "") << code[i];
    return os.str();
}

CanonicalCode canonical_form(const Mop& m) {
    CanonicalCode best;
    for (int refl = 0; refl < 2; ++refl) {
        for (int rot = 0; rot < m.n; ++rot) {
            Mop im;
            im.n = m.n;
            for (auto [a, b] : m.diagonals) {
                int x = refl ? (rot - a % m.n + 2 * m.n) % m.n : (a + rot) % m.n;
                int y = refl ? (rot - b % m.n + 2 * m.n) % m.n : (b + rot) % m.n;
                im.diagonals.push_back({x, y});
            }
            normalize(im);
            CanonicalCode cc;
            cc.code.push_back((uint16_t)m.n);
            for (auto [a, b] : im.diagonals) {
                cc.code.push_back((uint16_t)a);
                cc.code.push_back((uint16_t)b);
            }
            if (best.code.empty() || cc < best) best = cc;
        }
    }
    return best;
}

namespace {

cpp_int uniform_below(std::mt19937_64& rng, const cpp_int& bound) {
    if (bound <= 1) return 0;
    unsigned bits = (unsigned)boost::multiprecision::msb(bound) + 1;
    while (true) {
        cpp_int x = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            x <<= 64;
            x |= rng();
        }
        x >>= (64 - bits % 64) % 64;
        if (x < bound) return x;
    }
}

void sample_segment(int a, int b, const std::vector<cpp_int>& cat,
                    std::mt19937_64& rng,
                    std::vector<std::pair<int, int>>& diags) {
    if (b - a < 2) return;
    cpp_int total = cat[b - a - 1];
    cpp_int r = uniform_below(rng, total);
    for (int c = a + 1; c < b; ++c) {
        cpp_int w = cat[c - a - 1] * cat[b - c - 1];
        if (r < w) {
            if (c - a >= 2) diags.push_back({a, c});
            if (b - c >= 2) diags.push_back({c, b});
            sample_segment(a, c, cat, rng, diags);
            sample_segment(c, b, cat, rng, diags);
            return;
        }
        r -= w;
    }
    throw std::logic_error("catalan weights did not sum to total");
}

}  // namespace

Mop random_mop(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_mop: n must be >= 3");
    std::mt19937_64 rng(seed);
    Mop m;
    m.n = n;
    sample_segment(0, n - 1, catalan_table(n - 2), rng, m.diagonals);
    normalize(m);
    return m;
}

Mop family(const std::string& name, int n) {
    if (n < 3) throw std::invalid_argument("family: n must be >= 3");
    Mop m;
    m.n = n;
    if (name == "fan") {
        for (int i = 2; i <= n - 2; ++i) m.diagonals.push_back({0, i});
    } else if (name == "serpentine") {
        int a = 1, b = n - 1;
        if (n >= 4) m.diagonals.push_back({a, b});
        bool from_low = true;
        while ((int)m.diagonals.size() < n - 3) {
            if (from_low) ++a;
            else --b;
            from_low = !from_low;
            m.diagonals.push_back({a, b});
        }
    } else {
        throw std::invalid_argument("unknown family: " + name);
    }
    normalize(m);
    return m;
}

}  // namespace mopdom
