#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qaffine/blocks.hpp"
#include "qaffine/verify.hpp"

using namespace qaffine;
using nlohmann::json;

namespace {

enum class Format { text, json };

struct Options {
    Format format = Format::text;
    std::string type;
    std::vector<std::string> points;
    int i = 0;
    int j = 0;
    std::string weights;
    std::string file;
    bool all_ranks = false;
    bool all = false;
    int criterion = 0;
    std::uint64_t seed = kDefaultSeed;
};

// Usage errors that surface only after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AffineWeightList parse_weights(const std::string& text)
{
    AffineWeightList w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos)
            w.items.push_back(parse_point(item.substr(item.find_first_not_of(" \t"))));
    return w;
}

json root_json(const RootVec& v) { return json(v); }

std::string matrix_text(const IntMatrix& m)
{
    std::ostringstream os;
    for (const auto& row : m) {
        for (std::size_t k = 0; k < row.size(); ++k)
            os << (k ? " " : "") << (row[k] >= 0 ? " " : "") << row[k];
        os << '\n';
    }
    return os.str();
}

std::vector<SigmaPoint> need_points(const Options& o, std::size_t n)
{
    if (o.points.size() != n)
        throw UsageError("expected " + std::to_string(n) + " point argument(s) of the form i@<scalar>");
    std::vector<SigmaPoint> out;
    for (const auto& s : o.points)
        out.push_back(parse_point(s));
    return out;
}

void check_nodes(const AffineData& d, const std::vector<SigmaPoint>& ps)
{
    for (const auto& p : ps)
        if (!d.valid_node(p.node))
            throw RankOutOfRange("node " + std::to_string(p.node) + " is outside 1.." + std::to_string(d.rank()));
}

std::string fin_name(FinType t) { return t.name(); }

int cmd_cartan_check(const Options& o)
{
    AffineType base = parse_type(o.type);
    std::vector<AffineType> types;
    if (o.all_ranks) {
        for (const AffineType& t : desk_types())
            if (t.family == base.family)
                types.push_back(t);
    } else {
        types.push_back(make_type(base.family, base.n));
    }
    bool ok = true;
    json out = json::array();
    for (const AffineType& t : types) {
        Invariants inv(AffineData::build(t));
        QDatum q = default_qdatum(inv.data());
        GramResult g = gram(inv, q);
        ok = ok && g.equal();
        std::string name = fin_name(q.fin().type());
        if (o.format == Format::json) {
            json mism = json::array();
            for (const auto& m : g.mismatches)
                mism.push_back({{"i", m.i}, {"j", m.j}, {"got", m.got}, {"expected", m.expected}});
            out.push_back({{"type", t.name()}, {"gfin", name}, {"matrix", g.matrix}, {"equal", g.equal()},
                           {"mismatches", mism}});
        } else {
            std::cout << t.name() << '\n' << matrix_text(g.matrix);
            if (g.equal())
                std::cout << "OK: Cartan of " << name << '\n';
            else
                for (const auto& m : g.mismatches)
                    std::cout << "MISMATCH at (" << m.i << "," << m.j << "): " << m.got << " expected " << m.expected
                              << '\n';
        }
    }
    if (o.format == Format::json)
        std::cout << (o.all_ranks ? out : out[0]).dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_denom(const Options& o)
{
    AffineData d = AffineData::build(parse_type(o.type));
    if (!d.valid_node(o.i) || !d.valid_node(o.j))
        throw RankOutOfRange("--i/--j must lie in 1.." + std::to_string(d.rank()));
    DenominatorTable table(d);
    const Denominator& den = table.get(o.i, o.j);
    if (o.format == Format::json) {
        json roots = json::array();
        for (const auto& [r, m] : den.roots.roots())
            roots.push_back({{"root", r.to_string()}, {"multiplicity", m}});
        std::cout << json{{"type", d.type().name()}, {"i", o.i}, {"j", o.j}, {"factored", den.factored_string()},
                          {"degree", den.roots.degree()}, {"roots", roots}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "d_" << o.i << "," << o.j << "(z) = " << den.factored_string() << '\n';
        for (const auto& [r, m] : den.roots.roots())
            std::cout << "  " << r.to_string() << (m > 1 ? "  x" + std::to_string(m) : "") << '\n';
    }
    return 0;
}

int cmd_pair_invariant(const Options& o, const std::string& which)
{
    Invariants inv(AffineData::build(parse_type(o.type)));
    auto ps = need_points(o, 2);
    check_nodes(inv.data(), ps);
    int v = which == "de" ? inv.de(ps[0], ps[1])
            : which == "lambda" ? inv.lambda(ps[0], ps[1])
                                : inv.lambda_inf(ps[0], ps[1]);
    if (o.format == Format::json)
        std::cout << json{{"type", inv.data().type().name()}, {"invariant", which}, {"p1", ps[0].to_string()},
                          {"p2", ps[1].to_string()}, {"value", v}}
                         .dump(2)
                  << '\n';
    else
        std::cout << v << '\n';
    return 0;
}

void print_function(const Options& o, const Invariants& inv, const SigmaFunction& f)
{
    if (o.format == Format::json) {
        json vals = json::array();
        for (const auto& [p, v] : f.values())
            vals.push_back({{"point", p.to_string()}, {"value", v}});
        std::cout << json{{"type", inv.data().type().name()}, {"values", vals}}.dump(2) << '\n';
        return;
    }
    if (f.is_zero())
        std::cout << "0\n";
    for (const auto& [p, v] : f.values())
        std::cout << p.to_string() << "  " << v << '\n';
}

int cmd_s_func(const Options& o)
{
    Invariants inv(AffineData::build(parse_type(o.type)));
    auto ps = need_points(o, 1);
    check_nodes(inv.data(), ps);
    print_function(o, inv, inv.s_func(ps[0]));
    return 0;
}

int cmd_e_of(const Options& o)
{
    Invariants inv(AffineData::build(parse_type(o.type)));
    AffineWeightList w = parse_weights(o.weights);
    check_nodes(inv.data(), w.items);
    print_function(o, inv, inv.e_of(w));
    return 0;
}

int cmd_sigma_q(const Options& o)
{
    AffineData d = AffineData::build(parse_type(o.type));
    QDatum q = default_qdatum(d);
    auto entries = sigma_q(q, d);
    std::sort(entries.begin(), entries.end(), [](const SigmaQEntry& a, const SigmaQEntry& b) {
        return std::tuple{a.point.node, -a.point.param.q6(), a.point.param.phase()} <
               std::tuple{b.point.node, -b.point.param.q6(), b.point.param.phase()};
    });
    if (o.format == Format::json) {
        json rows = json::array();
        for (const auto& e : entries)
            rows.push_back({{"node", e.point.node}, {"scalar", e.point.param.to_string()}, {"beta", root_json(e.beta)},
                            {"source", {e.source.node, e.source.p}}});
        std::cout << json{{"type", d.type().name()}, {"gfin", fin_name(q.fin().type())}, {"entries", rows}}.dump(2)
                  << '\n';
    } else {
        for (const auto& e : entries)
            std::cout << e.point.node << "  " << e.point.param.to_string() << "  " << root_string(e.beta) << '\n';
    }
    return 0;
}

json label_json(const BlockLabel& l)
{
    json out = json::array();
    for (const auto& c : l.components)
        out.push_back({{"component", component_name(c.t)}, {"coords", c.coords}});
    return out;
}

void print_label(const BlockLabel& l)
{
    if (l.is_zero())
        std::cout << "0\n";
    for (const auto& c : l.components)
        std::cout << component_name(c.t) << "  " << root_string(c.coords) << '\n';
}

int cmd_block_label(const Options& o)
{
    Invariants inv(AffineData::build(parse_type(o.type)));
    QDatum q = default_qdatum(inv.data());
    BlockLabel l = block_label(inv, q, parse_weights(o.weights));
    if (o.format == Format::json)
        std::cout << label_json(l).dump(2) << '\n';
    else
        print_label(l);
    return 0;
}

// One module per line: a JSON array of "i@scalar" strings, or {"weights": [...]}.
std::vector<AffineWeightList> read_modules(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::vector<AffineWeightList> mods;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (j.is_object())
            j = j.value("weights", json::array());
        if (!j.is_array())
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected an array of points");
        AffineWeightList w;
        for (const auto& s : j)
            w.items.push_back(parse_point(s.get<std::string>()));
        mods.push_back(std::move(w));
    }
    return mods;
}

int cmd_partition(const Options& o)
{
    Invariants inv(AffineData::build(parse_type(o.type)));
    QDatum q = default_qdatum(inv.data());
    auto mods = read_modules(o.file);
    auto groups = partition_blocks(inv, q, mods);
    if (o.format == Format::json) {
        json out = json::array();
        for (const auto& g : groups)
            out.push_back({{"label", label_json(block_label(inv, q, mods[g.front()]))}, {"modules", g}});
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& g : groups) {
            std::cout << "block:";
            for (auto k : g)
                std::cout << ' ' << k;
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_verify(const Options& o)
{
    if (!o.all && o.criterion == 0)
        throw UsageError("verify needs --all or --criterion N");
    std::vector<CriterionResult> results;
    if (o.all)
        results = run_acceptance(o.seed);
    else
        results.push_back(run_criterion(o.criterion, o.seed));
    bool ok = true;
    json out = json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        if (o.format == Format::json)
            out.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                           {"seconds", r.seconds}});
        else
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.title
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << '\n';
    }
    if (o.format == Format::json)
        std::cout << out.dump(2) << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral combinatorics of quantum affine algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    app.add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");

    auto with_type = [&](CLI::App* sub) {
        sub->add_option("type", o.type, "Affine type, e.g. B3-1, A4-2, D4-3")->required();
        return sub;
    };
    auto* cartan = with_type(app.add_subcommand("cartan-check", "Gram matrix of the simple-root functions"));
    cartan->add_flag("--all-ranks", o.all_ranks, "Sweep every desk rank of the family");
    auto* denom = with_type(app.add_subcommand("denom", "Denominator d_{i,j}(z)"));
    denom->add_option("--i", o.i)->required();
    denom->add_option("--j", o.j)->required();
    std::map<std::string, CLI::App*> pair_cmds;
    for (const char* name : {"de", "lambda", "lambda-inf"}) {
        auto* sub = with_type(app.add_subcommand(name, std::string("Invariant ") + name + " of two points"));
        sub->add_option("points", o.points, "Two points i@<scalar>")->expected(2);
        pair_cmds[name] = sub;
    }
    auto* sfunc = with_type(app.add_subcommand("s-func", "The function s_{i,a} on orbit representatives"));
    sfunc->add_option("points", o.points, "One point i@<scalar>")->expected(1);
    auto* eof = with_type(app.add_subcommand("e-of", "E of a tensor product of fundamentals"));
    eof->add_option("--weights", o.weights, "Comma-separated points")->required();
    auto* sigq = with_type(app.add_subcommand("sigma-q", "Table of phi_Q over the positive roots"));
    auto* label = with_type(app.add_subcommand("block-label", "Block label of a list of fundamentals"));
    label->add_option("--weights", o.weights, "Comma-separated points")->required();
    auto* part = with_type(app.add_subcommand("partition", "Group modules by block"));
    part->add_option("--file", o.file, "One JSON list of points per line")->required();
    auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    verify->add_flag("--all", o.all, "Every criterion");
    verify->add_option("--criterion", o.criterion, "A single criterion")->check(CLI::Range(1, kCriterionCount));
    verify->add_option("--seed", o.seed, "Sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cartan)
            return cmd_cartan_check(o);
        if (*denom)
            return cmd_denom(o);
        for (const auto& [name, sub] : pair_cmds)
            if (*sub)
                return cmd_pair_invariant(o, name);
        if (*sfunc)
            return cmd_s_func(o);
        if (*eof)
            return cmd_e_of(o);
        if (*sigq)
            return cmd_sigma_q(o);
        if (*label)
            return cmd_block_label(o);
        if (*part)
            return cmd_partition(o);
        if (*verify)
            return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
