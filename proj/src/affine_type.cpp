#include "qaffine/affine_type.hpp"

#include <map>
#include <regex>

namespace qaffine {

namespace {

struct FamilyInfo {
    const char* letter;
    int twist;
    int min_n;
    int max_n;  // 0: unbounded
};

const std::map<Family, FamilyInfo>& family_table()
{
    static const std::map<Family, FamilyInfo> table = {
        {Family::A1, {"A", 1, 1, 0}},      {Family::B1, {"B", 1, 2, 0}},
        {Family::C1, {"C", 1, 3, 0}},      {Family::D1, {"D", 1, 4, 0}},
        {Family::E6_1, {"E6", 1, 6, 6}},   {Family::E7_1, {"E7", 1, 7, 7}},
        {Family::E8_1, {"E8", 1, 8, 8}},   {Family::F4_1, {"F4", 1, 4, 4}},
        {Family::G2_1, {"G2", 1, 2, 2}},   {Family::A2_even, {"A", 2, 1, 0}},
        {Family::A2_odd, {"A", 2, 2, 0}},  {Family::D2, {"D", 2, 3, 0}},
        {Family::E6_2, {"E6", 2, 4, 4}},   {Family::D4_3, {"D4", 3, 2, 2}},
    };
    return table;
}

}  // namespace

AffineType make_type(Family f, int n)
{
    const FamilyInfo& info = family_table().at(f);
    if (n < info.min_n || (info.max_n && n > info.max_n))
        throw RankOutOfRange("rank " + std::to_string(n) + " is out of range for this family");
    return {f, n};
}

std::string AffineType::name() const
{
    switch (family) {
    case Family::A1: return "A" + std::to_string(n) + "-1";
    case Family::B1: return "B" + std::to_string(n) + "-1";
    case Family::C1: return "C" + std::to_string(n) + "-1";
    case Family::D1: return "D" + std::to_string(n) + "-1";
    case Family::E6_1: return "E6-1";
    case Family::E7_1: return "E7-1";
    case Family::E8_1: return "E8-1";
    case Family::F4_1: return "F4-1";
    case Family::G2_1: return "G2-1";
    case Family::A2_even: return "A" + std::to_string(2 * n) + "-2";
    case Family::A2_odd: return "A" + std::to_string(2 * n - 1) + "-2";
    case Family::D2: return "D" + std::to_string(n + 1) + "-2";
    case Family::E6_2: return "E6-2";
    case Family::D4_3: return "D4-3";
    }
    return "?";
}

AffineType parse_type(const std::string& s)
{
    static const std::regex re(R"(^([ABCDEFG])(\d+)-([123])$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw ParseError("type string must look like <family><n>-<twist>, got '" + s + "'", 0);
    char fam = m[1].str()[0];
    int k = std::stoi(m[2].str());
    int twist = std::stoi(m[3].str());
    auto bad = [&]() -> AffineType { throw RankOutOfRange("unsupported affine type '" + s + "'"); };
    if (twist == 1) {
        switch (fam) {
        case 'A': return make_type(Family::A1, k);
        case 'B': return make_type(Family::B1, k);
        case 'C': return make_type(Family::C1, k);
        case 'D': return make_type(Family::D1, k);
        case 'E':
            if (k == 6) return {Family::E6_1, 6};
            if (k == 7) return {Family::E7_1, 7};
            if (k == 8) return {Family::E8_1, 8};
            return bad();
        case 'F': return k == 4 ? AffineType{Family::F4_1, 4} : bad();
        case 'G': return k == 2 ? AffineType{Family::G2_1, 2} : bad();
        }
    } else if (twist == 2) {
        if (fam == 'A')
            return k % 2 == 0 ? make_type(Family::A2_even, k / 2) : make_type(Family::A2_odd, (k + 1) / 2);
        if (fam == 'D')
            return make_type(Family::D2, k - 1);
        if (fam == 'E' && k == 6)
            return {Family::E6_2, 4};
    } else if (fam == 'D' && k == 4) {
        return {Family::D4_3, 2};
    }
    return bad();
}

SigmaPoint parse_point(const std::string& text)
{
    auto at = text.find('@');
    if (at == std::string::npos || at == 0)
        throw ParseError("point must look like i@<scalar>", 0);
    int node = 0;
    try {
        std::size_t used = 0;
        node = std::stoi(text.substr(0, at), &used);
        if (used != at)
            throw ParseError("bad node index", used);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad node index", 0);
    }
    try {
        return {node, parse_scalar(std::string_view(text).substr(at + 1))};
    } catch (const ParseError& e) {
        throw ParseError(std::string("bad scalar in point '") + text + "'", at + 1 + e.offset());
    }
}

bool AffineData::untwisted() const
{
    switch (family()) {
    case Family::A2_even:
    case Family::A2_odd:
    case Family::D2:
    case Family::E6_2:
    case Family::D4_3:
        return false;
    default:
        return true;
    }
}

bool AffineData::simply_laced() const
{
    switch (family()) {
    case Family::A1:
    case Family::D1:
    case Family::E6_1:
    case Family::E7_1:
    case Family::E8_1:
        return true;
    default:
        return false;
    }
}

AffineData AffineData::build(AffineType type)
{
    type = make_type(type.family, type.n);
    AffineData d;
    d.type_ = type;
    const int n = type.n;
    auto q = [](int e) { return SpectralScalar(0, 6 * e); };
    const SpectralScalar minus = SpectralScalar::minus_one();

    d.m_.assign(n, 1);
    d.istar_.resize(n);
    for (int i = 1; i <= n; ++i)
        d.istar_[i - 1] = i;
    d.g0_ = Diagram::chain(n);

    switch (type.family) {
    case Family::A1:
        d.pstar_ = (-q(1)).pow(n + 1);
        for (int i = 1; i <= n; ++i)
            d.istar_[i - 1] = n + 1 - i;
        d.gfin_ = {'A', n};
        break;
    case Family::B1:
        d.pstar_ = q(2 * n - 1);
        d.gfin_ = {'A', 2 * n - 1};
        break;
    case Family::C1:
        d.pstar_ = q(n + 1);
        d.gfin_ = {'D', n + 1};
        break;
    case Family::D1:
        d.pstar_ = q(2 * n - 2);
        if (n % 2 == 1)
            std::swap(d.istar_[n - 2], d.istar_[n - 1]);
        d.gfin_ = {'D', n};
        d.g0_ = fin_diagram({'D', n});
        break;
    case Family::E6_1:
        d.pstar_ = q(12);
        d.istar_ = {6, 2, 5, 4, 3, 1};
        d.gfin_ = {'E', 6};
        d.g0_ = fin_diagram({'E', 6});
        break;
    case Family::E7_1:
        d.pstar_ = q(18);
        d.gfin_ = {'E', 7};
        d.g0_ = fin_diagram({'E', 7});
        break;
    case Family::E8_1:
        d.pstar_ = q(30);
        d.gfin_ = {'E', 8};
        d.g0_ = fin_diagram({'E', 8});
        break;
    case Family::F4_1:
        d.pstar_ = q(9);
        d.gfin_ = {'E', 6};
        break;
    case Family::G2_1:
        d.pstar_ = q(4);
        d.gfin_ = {'D', 4};
        break;
    case Family::A2_even:
        d.pstar_ = minus * q(2 * n + 1);
        d.gfin_ = {'A', 2 * n};
        break;
    case Family::A2_odd:
        d.pstar_ = minus * q(2 * n);
        d.m_[n - 1] = 2;
        d.gfin_ = {'A', 2 * n - 1};
        break;
    case Family::D2:
        d.pstar_ = minus.pow(n + 1) * q(2 * n);
        for (int i = 1; i < n; ++i)
            d.m_[i - 1] = 2;
        d.gfin_ = {'D', n + 1};
        break;
    case Family::E6_2:
        d.pstar_ = minus * q(12);
        d.m_ = {1, 1, 2, 2};
        d.gfin_ = {'E', 6};
        break;
    case Family::D4_3:
        d.pstar_ = q(6);
        d.m_ = {1, 3};
        d.gfin_ = {'D', 4};
        break;
    }
    return d;
}

SigmaPoint AffineData::canonical(SigmaPoint p) const
{
    if (!valid_node(p.node))
        throw Error("node " + std::to_string(p.node) + " is not in I_0 of " + type_.name());
    int period = SpectralScalar::kPhaseModulus / m(p.node);
    return {p.node, SpectralScalar(p.param.phase() % period, p.param.q6())};
}

bool sigma_eq(const AffineData& d, SigmaPoint p1, SigmaPoint p2)
{
    if (p1.node != p2.node || p1.param.q6() != p2.param.q6())
        return false;
    int diff = p1.param.phase() - p2.param.phase();
    return (d.m(p1.node) * diff) % SpectralScalar::kPhaseModulus == 0;
}

std::vector<AffineType> desk_types()
{
    std::vector<AffineType> out;
    for (int n = 1; n <= 6; ++n) out.push_back({Family::A1, n});
    for (int n = 2; n <= 5; ++n) out.push_back({Family::B1, n});
    for (int n = 3; n <= 5; ++n) out.push_back({Family::C1, n});
    for (int n = 4; n <= 6; ++n) out.push_back({Family::D1, n});
    for (int n = 1; n <= 4; ++n) out.push_back({Family::A2_even, n});
    for (int n = 2; n <= 4; ++n) out.push_back({Family::A2_odd, n});
    for (int n = 3; n <= 5; ++n) out.push_back({Family::D2, n});
    out.push_back({Family::E6_1, 6});
    out.push_back({Family::E7_1, 7});
    out.push_back({Family::E8_1, 8});
    out.push_back({Family::F4_1, 4});
    out.push_back({Family::G2_1, 2});
    out.push_back({Family::E6_2, 4});
    out.push_back({Family::D4_3, 2});
    return out;
}

}  // namespace qaffine
