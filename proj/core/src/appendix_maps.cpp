#include "rinf/appendix_maps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace rinf {

Quaternion Quaternion::operator*(const Quaternion& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
}

double Quaternion::norm() const {
    return std::sqrt(w * w + x * x + y * y + z * z);
}

Quaternion Quaternion::normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::inverse() const {
    const double n2 = w * w + x * x + y * y + z * z;
    return {w / n2, -x / n2, -y / n2, -z / n2};
}

double distance(const Quaternion& p, const Quaternion& q) {
    const double dw = p.w - q.w, dx = p.x - q.x, dy = p.y - q.y,
                 dz = p.z - q.z;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

namespace {

std::vector<QLetter> parse_word(const std::string& text) {
    std::vector<QLetter> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int var = 0, exp = 1;
        if (tok.rfind("q1", 0) == 0) var = 1;
        else if (tok.rfind("q2", 0) == 0) var = 2;
        else throw precondition_error("BadWord", "token '" + tok + "'");
        const std::string rest = tok.substr(2);
        if (!rest.empty()) {
            if (rest[0] != '^')
                throw precondition_error("BadWord", "token '" + tok + "'");
            try {
                std::size_t used = 0;
                exp = std::stoi(rest.substr(1), &used);
                if (used != rest.size() - 1 || exp == 0)
                    throw precondition_error("BadWord", "token '" + tok + "'");
            } catch (const std::logic_error&) {
                throw precondition_error("BadWord", "token '" + tok + "'");
            }
        }
        const QLetter pos = var == 1 ? QLetter::Q1 : QLetter::Q2;
        const QLetter neg = var == 1 ? QLetter::Q1inv : QLetter::Q2inv;
        for (int i = 0; i < std::abs(exp); ++i)
            out.push_back(exp > 0 ? pos : neg);
    }
    return out;
}

}  // namespace

TorusMapSpec TorusMapSpec::parse(const std::string& w1, const std::string& w2,
                                 const Mat2& intended) {
    return {parse_word(w1), parse_word(w2), intended};
}

std::pair<Quaternion, Quaternion> h_map(const TorusMapSpec& spec,
                                        const Quaternion& q1,
                                        const Quaternion& q2) {
    auto eval = [&](const std::vector<QLetter>& word) {
        Quaternion acc{1, 0, 0, 0};
        for (QLetter l : word) {
            switch (l) {
                case QLetter::Q1: acc = acc * q1; break;
                case QLetter::Q1inv: acc = acc * q1.inverse(); break;
                case QLetter::Q2: acc = acc * q2; break;
                case QLetter::Q2inv: acc = acc * q2.inverse(); break;
            }
            acc = acc.normalized();  // keeps the drift below 1e-12 per word
        }
        return acc;
    };
    return {eval(spec.word1), eval(spec.word2)};
}

Mat2 induced_h3_matrix(const TorusMapSpec& spec) {
    auto sums = [](const std::vector<QLetter>& word) {
        std::pair<Int, Int> s{0, 0};
        for (QLetter l : word) {
            switch (l) {
                case QLetter::Q1: ++s.first; break;
                case QLetter::Q1inv: --s.first; break;
                case QLetter::Q2: ++s.second; break;
                case QLetter::Q2inv: --s.second; break;
            }
        }
        return s;
    };
    const auto [r, s] = sums(spec.word1);
    const auto [t, u] = sums(spec.word2);
    const Mat2 m{r, s, t, u};
    if (m != spec.intended)
        throw precondition_error("MatrixMismatch", "exponent sums " + m.str() +
                                                       " vs intended " +
                                                       spec.intended.str());
    return m;
}

double verify_inverse_pair(const TorusMapSpec& spec_a,
                           const TorusMapSpec& spec_a_inv, int n,
                           std::uint64_t seed) {
    if (n < 1) throw precondition_error("BadSampleCount", std::to_string(n));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_unit = [&] {
        Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        return q.normalized();
    };

    double worst = 0;
    for (int i = 0; i < n; ++i) {
        const Quaternion q1 = random_unit(), q2 = random_unit();
        for (bool a_first : {true, false}) {
            const auto& s1 = a_first ? spec_a : spec_a_inv;
            const auto& s2 = a_first ? spec_a_inv : spec_a;
            const auto [m1, m2] = h_map(s1, q1, q2);
            const auto [r1, r2] = h_map(s2, m1, m2);
            worst = std::max(worst, std::max(distance(r1, q1), distance(r2, q2)));
        }
    }
    return worst;
}

}  // namespace rinf
