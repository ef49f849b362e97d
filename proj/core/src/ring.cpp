#include "qcyc/ring.hpp"

#include "qcyc/rword.hpp"

namespace qcyc {

RWord RWord::from_vec(std::span<const RElem> v) {
    if (v.size() > static_cast<std::size_t>(kMaxN))
        throw std::invalid_argument("RWord: length exceeds supported maximum");
    RWord w;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto g = gray(v[i]);
        w.a |= static_cast<std::uint64_t>(g[0]) << i;
        w.ac |= static_cast<std::uint64_t>(g[1]) << i;
        w.b |= static_cast<std::uint64_t>(g[2]) << i;
    }
    return w;
}

RVec RWord::to_vec(int n) const {
    RVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        F2 ga = (a >> i) & 1, gac = (ac >> i) & 1, gb = (b >> i) & 1;
        v[static_cast<std::size_t>(i)] = RElem{ga, gb, static_cast<F2>(ga ^ gac)};
    }
    return v;
}

RwWord RwWord::from_vec(std::span<const RwElem> v) {
    if (v.size() > static_cast<std::size_t>(kMaxN))
        throw std::invalid_argument("RwWord: length exceeds supported maximum");
    RwWord w;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w.al |= static_cast<std::uint64_t>(v[i].alpha()) << i;
        w.be |= static_cast<std::uint64_t>(v[i].beta()) << i;
    }
    return w;
}

RwVec RwWord::to_vec(int n) const {
    RwVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] =
            RwElem{static_cast<F2>((al >> i) & 1), static_cast<F2>((be >> i) & 1)};
    return v;
}

std::vector<F2> gray_map(std::span<const RElem> v) {
    std::vector<F2> out;
    out.reserve(3 * v.size());
    for (RElem x : v) {
        auto g = gray(x);
        out.push_back(g[0]);
        out.push_back(g[1]);
        out.push_back(g[2]);
    }
    return out;
}

int lee_weight(std::span<const RElem> v) {
    int w = 0;
    for (RElem x : v) w += lee_weight(x);
    return w;
}

RVec shift(std::span<const RElem> v) {
    RVec out(v.size());
    if (v.empty()) return out;
    out[0] = v.back();
    for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
}

RElem r_dot(std::span<const RElem> x, std::span<const RElem> y) {
    RElem s;
    for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
    return s;
}

RwElem rw_dot(std::span<const RwElem> x, std::span<const RwElem> y) {
    RwElem s;
    for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
    return s;
}

std::string relem_str(RElem x) {
    if (x.is_zero()) return "0";
    std::string out;
    auto append = [&out](const char* term) {
        if (!out.empty()) out += "+";
        out += term;
    };
    if (x.a()) append("1");
    if (x.b()) append("u");
    if (x.c()) append("u^2");
    return out;
}

RElem relem_parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s == "0") return RElem::zero();
    RElem out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term == "1") out = out + RElem::one();
        else if (term == "u") out = out + RElem::u();
        else if (term == "u^2") out = out + RElem::u2();
        else throw std::invalid_argument("relem_parse: bad term '" + term + "'");
    }
    return out;
}

} // namespace qcyc
