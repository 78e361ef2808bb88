#include "indcover/cli.hpp"

#include "indcover/atlas.hpp"
#include "indcover/bounds.hpp"
#include "indcover/io.hpp"
#include "indcover/pipeline.hpp"
#include "indcover/transit.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>

namespace indcover::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown to stop with exit code 1 after the reason has been printed.
struct VerificationFailed {};

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

// Collects emitted files so the manifest can list them with digests.
class OutputDir {
  public:
    explicit OutputDir(fs::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) {
            throw std::runtime_error("cannot create " + dir_.string() + ": " + ec.message());
        }
    }

    void put(const std::string& name, const std::string& contents) {
        write_file(dir_ / name, contents);
        files_[name] = {sha256_hex(contents), contents.size()};
    }

    nlohmann::json file_list() const {
        auto list = nlohmann::json::array();
        for (const auto& [name, info] : files_) {
            list.push_back({{"name", name}, {"sha256", info.first}, {"bytes", info.second}});
        }
        return list;
    }

  private:
    fs::path dir_;
    std::map<std::string, std::pair<std::string, std::size_t>> files_;
};

std::size_t checked_degree(std::size_t d) {
    if (d < 1) {
        throw UsageError("--degree must be at least 1");
    }
    return d;
}

GeneralizedGraph load_graph(const std::string& path) { return read_ggf(read_file(path)); }

std::string cover_name(const CoverCertificate& c) { return "cover_r" + std::to_string(c.r) + ".txt"; }

// ---------------------------------------------------------------- build

struct BuildOptions {
    std::size_t degree = 0;
    std::string strategy = "minimal";
    std::string out_dir;
    bool allow_large = false;
};

int cmd_build(const BuildOptions& o, std::ostream& out, std::ostream& err) {
    const std::size_t d = checked_degree(o.degree);
    Strategy strategy;
    try {
        strategy = parse_strategy(o.strategy);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (d >= kLargeDegree && !o.allow_large) {
        throw UsageError("degree " + std::to_string(d) + " builds need --allow-large");
    }
    const auto result = build_all_covers(d, strategy, o.allow_large);
    const auto check = check_build(result);
    if (!check.ok) {
        for (const auto& p : check.problems) {
            err << "build check failed: " << p << '\n';
        }
        return 1;
    }

    OutputDir dir(o.out_dir);
    dir.put("graph.ggf", write_ggf(*result.graph));
    dir.put("graph.edges", write_edges(*result.graph));
    for (const auto& c : result.covers) {
        dir.put(cover_name(c), write_cover(c));
    }
    auto orders = nlohmann::json::array();
    auto cases = nlohmann::json::array();
    for (std::size_t i = 0; i < result.factor_list.size(); ++i) {
        const auto& f = result.factor_list[i];
        const auto idx = std::to_string(i);
        dir.put("factor_" + idx + ".ggf", write_ggf(*f.graph));
        dir.put("factor_" + idx + "_cover.txt", write_cover(f.cover));
        dir.put("projection_" + idx + ".covmap", write_covmap(result.projections[i]));
        orders.push_back(f.graph->num_vertices());
        cases.push_back(std::string(to_string(f.construction_case)));
    }
    const nlohmann::json manifest{
        {"degree", d},
        {"strategy", std::string(to_string(strategy))},
        {"vertex_count", result.graph->num_vertices()},
        {"factor_orders", orders},
        {"factor_cases", cases},
        {"files", dir.file_list()},
    };
    write_file(fs::path(o.out_dir) / "manifest.json", manifest.dump(2) + "\n");

    out << "degree " << d << " strategy " << to_string(strategy) << '\n';
    out << "vertices " << result.graph->num_vertices() << '\n';
    for (const auto& c : result.covers) {
        out << "cover r=" << c.r << " size " << c.subset.size() << " ok\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::string graph;
    std::vector<std::string> covers;
    std::string target;
    std::string covmap;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.target.empty() != o.covmap.empty()) {
        throw UsageError("--target and --covmap go together");
    }
    auto g = std::make_shared<const GeneralizedGraph>(load_graph(o.graph));
    const auto cls = classify(*g);
    out << "graph vertices " << g->num_vertices() << " darts " << g->num_darts();
    if (cls.regular_degree) {
        out << " regular " << *cls.regular_degree;
    }
    out << (cls.simple() ? " simple" : " multigraph") << '\n';

    for (const auto& path : o.covers) {
        const auto c = read_cover(read_file(path));
        const auto rep = verify_cover(*g, c);
        if (!rep.ok) {
            const auto& f = rep.failures.front();
            out << "cover r=" << c.r << " FAIL at vertex " << f.vertex << ": " << f.reason << '\n';
            throw VerificationFailed{};
        }
        out << "cover r=" << c.r << " ok\n";
    }

    if (!o.covmap.empty()) {
        auto t = std::make_shared<const GeneralizedGraph>(load_graph(o.target));
        const auto cm = make_covering_map(g, t, read_covmap(read_file(o.covmap)));
        const auto rep = verify_covering(cm);
        if (!rep.ok) {
            const auto& v = *rep.first_violation;
            out << "covering FAIL item " << v.item << ": " << v.message << '\n';
            throw VerificationFailed{};
        }
        const auto st = structure_check(cm);
        if (!st.ok) {
            out << "covering structure FAIL: " << st.violation << '\n';
            throw VerificationFailed{};
        }
        out << "covering ok\n";
    }
    return 0;
}

// ---------------------------------------------------------------- atlas

struct AtlasOptions {
    std::size_t degree = 0;
    std::size_t r = 0;
    std::string kind;
    std::string out_dir;
};

int cmd_atlas(const AtlasOptions& o, std::ostream& out) {
    const std::size_t d = checked_degree(o.degree);
    auto needs_r = [&] {
        if (o.r < 1 || o.r > d) {
            throw UsageError("--r must lie in [1, degree]");
        }
    };
    AtlasEntry e;
    if (o.kind == "small") {
        needs_r();
        e = small_graph(d, o.r);
    } else if (o.kind == "compressed") {
        needs_r();
        e = compressed_graph(d, o.r);
    } else if (o.kind == "complete") {
        e = complete_entry(d);
    } else if (o.kind == "dipole") {
        e = dipole_entry(d);
    } else {
        throw UsageError("unknown --kind '" + o.kind + "'");
    }
    OutputDir dir(o.out_dir);
    dir.put("graph.ggf", write_ggf(*e.graph));
    dir.put(cover_name(e.cover), write_cover(e.cover));
    if (e.matching) {
        std::string m;
        for (DartId x : *e.matching) {
            m += (m.empty() ? "" : " ") + std::to_string(x);
        }
        dir.put("matching.txt", m + "\n");
    }
    out << "case " << to_string(e.construction_case) << " vertices " << e.graph->num_vertices()
        << " cover size " << e.cover.subset.size() << '\n';
    return 0;
}

// ---------------------------------------------------------------- example3

int cmd_example3(const std::string& out_dir, std::ostream& out) {
    const auto ex = example_three_cover();
    OutputDir dir(out_dir);
    dir.put("graph.ggf", write_ggf(*ex.graph));
    for (const auto& c : ex.covers) {
        dir.put(cover_name(c), write_cover(c));
    }
    const auto rep = check_intersections(*ex.graph, {ex.covers.begin(), ex.covers.end()});
    out << "vertices " << ex.graph->num_vertices() << " degree " << ex.covers[0].d << '\n';
    for (const auto& c : ex.covers) {
        out << "cover r=" << c.r << " size " << c.subset.size() << " ok\n";
    }
    for (const auto& line : rep.lines) {
        if (line.kind == IntersectionKind::triple_independence) {
            out << "triple product " << fraction_string(line.expected) << " actual " << line.actual << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------- lowerbound

int cmd_lowerbound(std::size_t degree, bool as_json, std::ostream& out) {
    const auto rep = divisibility_lower_bound(checked_degree(degree));
    if (as_json) {
        out << to_json(rep) << '\n';
        return 0;
    }
    out << "d " << rep.d << '\n';
    out << "star_lcm " << rep.star_lcm << '\n';
    for (const auto& c : rep.single_constraints) {
        out << "single r=" << c.r1 << " divisor " << c.divisor << '\n';
    }
    for (const auto& c : rep.pair_constraints) {
        out << "pair r1=" << c.r1 << " r2=" << c.r2 << " divisor " << c.divisor << '\n';
    }
    for (const auto& c : rep.triple_constraints) {
        out << "triple r1=" << c.r1 << " r2=" << c.r2 << " divisor " << c.divisor << '\n';
    }
    out << "combined_lb " << rep.combined_lb << '\n';
    out << "diamond_lb " << fraction_string(rep.diamond_lb) << '\n';
    out << "construction_ub_simple " << rep.construction_ub_simple << '\n';
    out << "construction_ub_minimal " << rep.construction_ub_minimal << '\n';
    return 0;
}

// ---------------------------------------------------------------- transit

int cmd_transit(const std::string& graph, const std::string& red_path, bool check_region,
                std::ostream& out) {
    const auto g = load_graph(graph);
    auto red = read_vertex_list(read_file(red_path));
    std::sort(red.begin(), red.end());
    const auto p = transit_probabilities(g, red);
    out << fraction_string(p.first) << ' ' << fraction_string(p.second) << '\n';
    if (check_region) {
        const auto d = regular_degree_or_throw(g);
        const bool inside = in_region(p, d);
        out << "region d=" << d << (inside ? " inside" : " OUTSIDE") << '\n';
        if (!inside) {
            throw VerificationFailed{};
        }
    }
    return 0;
}

// ---------------------------------------------------------------- convert

struct ConvertOptions {
    std::string in;
    std::string from;
    std::string to;
    std::string out;
    std::optional<std::size_t> vertices;
};

int cmd_convert(const ConvertOptions& o) {
    const std::string text = read_file(o.in);
    const auto g = o.from == "ggf" ? read_ggf(text) : read_edges(text, o.vertices);
    write_file(o.out, o.to == "ggf" ? write_ggf(g) : write_edges(g));
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"independent exact covers in regular graphs"};
    app.name("indcover");
    app.require_subcommand(1);

    BuildOptions build;
    auto* sc_build = app.add_subcommand("build", "product construction for one degree");
    sc_build->add_option("--degree", build.degree)->required();
    sc_build->add_option("--strategy", build.strategy)->check(CLI::IsMember({"minimal", "simple", "simple_factors"}));
    sc_build->add_option("--out-dir", build.out_dir)->required();
    sc_build->add_flag("--allow-large", build.allow_large);

    VerifyOptions verify;
    auto* sc_verify = app.add_subcommand("verify", "check cover certificates and covering maps");
    sc_verify->add_option("--graph", verify.graph)->required();
    sc_verify->add_option("--cover", verify.covers);
    sc_verify->add_option("--target", verify.target);
    sc_verify->add_option("--covmap", verify.covmap);

    AtlasOptions atlas;
    auto* sc_atlas = app.add_subcommand("atlas", "emit one small factor graph");
    sc_atlas->add_option("--degree", atlas.degree)->required();
    sc_atlas->add_option("--r", atlas.r);
    sc_atlas->add_option("--kind", atlas.kind)->required()->check(CLI::IsMember({"small", "compressed", "complete", "dipole"}));
    sc_atlas->add_option("--out-dir", atlas.out_dir)->required();

    std::string example_dir;
    auto* sc_example = app.add_subcommand("example3", "2184-vertex graph with three covers");
    sc_example->add_option("--out-dir", example_dir)->required();

    std::size_t lb_degree = 0;
    bool lb_json = false;
    auto* sc_lb = app.add_subcommand("lowerbound", "divisibility lower bound report");
    sc_lb->add_option("--degree", lb_degree)->required();
    sc_lb->add_flag("--json", lb_json);

    std::string tr_graph;
    std::string tr_red;
    bool tr_region = false;
    auto* sc_transit = app.add_subcommand("transit", "exact two-step transit probabilities");
    sc_transit->add_option("--graph", tr_graph)->required();
    sc_transit->add_option("--red", tr_red)->required();
    sc_transit->add_flag("--check-region", tr_region);

    ConvertOptions conv;
    auto* sc_convert = app.add_subcommand("convert", "translate between ggf and edges");
    sc_convert->add_option("--in", conv.in)->required();
    sc_convert->add_option("--from", conv.from)->required()->check(CLI::IsMember({"ggf", "edges"}));
    sc_convert->add_option("--to", conv.to)->required()->check(CLI::IsMember({"ggf", "edges"}));
    sc_convert->add_option("--out", conv.out)->required();
    sc_convert->add_option("--vertices", conv.vertices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::map<CLI::App*, std::function<int()>> dispatch{
        {sc_build, [&] { return cmd_build(build, out, err); }},
        {sc_verify, [&] { return cmd_verify(verify, out); }},
        {sc_atlas, [&] { return cmd_atlas(atlas, out); }},
        {sc_example, [&] { return cmd_example3(example_dir, out); }},
        {sc_lb, [&] { return cmd_lowerbound(lb_degree, lb_json, out); }},
        {sc_transit, [&] { return cmd_transit(tr_graph, tr_red, tr_region, out); }},
        {sc_convert, [&] { return cmd_convert(conv); }},
    };
    try {
        return dispatch.at(app.get_subcommands().front())();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const VerificationFailed&) {
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace indcover::cli
