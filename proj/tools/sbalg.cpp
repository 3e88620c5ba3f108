// sbalg: command-line front end for presentations, modules and the family checks.
//
// Exit codes: 0 success, 1 a check failed, 2 bad usage or input, 3 inconclusive.

#include "sbalg/module_io.hpp"
#include "sbalg/paperlab.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sbalg;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field = "q";
    std::uint64_t seed = 0;
    bool structured = false;
    bool strict = false;
    bool verbose = false;

    // algebra selection
    std::string family;
    int r = 1;
    int m = 0;
    std::string algebra;
    std::vector<std::string> files;
    bool emit = false;

    // homological options
    std::size_t cutoff = 32;
    std::size_t trials = 0;
    std::size_t times = 1;

    // verify
    std::vector<std::string> claims;
    int m_max = 3;
    int t_max = 3;
    std::size_t samples = 100;
    std::size_t max_dim = 40;
    bool cutoff_set = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FieldSpec field_of(const Options& o)
{
    try {
        return FieldSpec::parse(o.field);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

AlgebraPtr family_algebra(const Options& o)
{
    if (o.family == "lambda")
        return lambda_algebra(o.r, o.m);
    if (o.family == "lambda1prime")
        return lambda1prime_algebra(o.r);
    throw UsageError("unknown family '" + o.family + "' (expected lambda or lambda1prime)");
}

// The algebra named by --family, --algebra or a presentation file argument.
AlgebraPtr chosen_algebra(const Options& o)
{
    if (!o.family.empty())
        return family_algebra(o);
    if (!o.algebra.empty())
        return algebra_from_spec(o.algebra);
    if (o.files.size() == 1)
        return make_algebra(parse_presentation(read_file(o.files[0])));
    throw UsageError("name an algebra with --family, --algebra or a presentation file");
}

std::string layer_names(const Presentation& p, const std::vector<std::size_t>& dims)
{
    std::string s;
    for (std::size_t v = 0; v < dims.size(); ++v)
        for (std::size_t k = 0; k < dims[v]; ++k)
            s += (s.empty() ? "" : " ") + p.vertices()[v];
    return "[" + s + "]";
}

std::string quiver_dot(const Presentation& p)
{
    std::ostringstream out;
    out << "digraph \"" << p.name() << "\" {\n";
    for (const auto& v : p.vertices())
        out << "  \"" << v << "\";\n";
    for (const auto& a : p.arrows())
        out << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << a.name << "\""
            << (a.letter == LetterClass::Beta ? ", style=dashed" : "") << "];\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------

int cmd_algebra(const std::string& action, const Options& o)
{
    if (action == "parse") {
        if (o.files.size() != 1)
            throw UsageError("algebra parse needs one presentation file");
        const auto p = parse_presentation(read_file(o.files[0]));
        const auto alg = make_algebra(p);
        if (o.structured) {
            nlohmann::ordered_json j{{"algebra", p.name()},
                                     {"vertices", p.vertex_count()},
                                     {"arrows", p.arrow_count()},
                                     {"relations", p.relations().size()},
                                     {"special_biserial", p.is_special_biserial()},
                                     {"dimension", alg->basis().dimension()}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << p.name() << ": " << p.vertex_count() << " vertices, " << p.arrow_count() << " arrows, "
                      << p.relations().size() << " relations, dimension " << alg->basis().dimension()
                      << (p.is_special_biserial() ? ", special biserial" : ", not special biserial") << '\n';
        }
        return exit_ok;
    }
    const auto alg = chosen_algebra(o);
    const auto& p = alg->presentation();
    if (action == "build") {
        if (o.emit) {
            std::cout << emit_presentation(p);
        } else {
            std::cout << p.name() << ": " << p.vertex_count() << " vertices, " << p.arrow_count() << " arrows, "
                      << p.relations().size() << " relations, dimension " << alg->basis().dimension() << '\n';
        }
        return exit_ok;
    }
    if (action == "emit") {
        std::cout << emit_presentation(p);
        return exit_ok;
    }
    if (action == "dot") {
        std::cout << quiver_dot(p);
        return exit_ok;
    }
    if (action == "projectives") {
        return with_field(field_of(o), [&]<class K>() {
            for (std::size_t x = 0; x < p.vertex_count(); ++x) {
                const auto px = projective<K>(alg, x);
                const auto layers = loewy_layers(px);
                if (o.structured) {
                    nlohmann::ordered_json j{{"vertex", p.vertices()[x]}, {"dim", px->total_dim()}};
                    auto ls = nlohmann::ordered_json::array();
                    for (const auto& l : layers)
                        ls.push_back(layer_names(p, l));
                    j["layers"] = ls;
                    std::cout << j.dump() << '\n';
                } else {
                    std::string row = "P(" + p.vertices()[x] + ")";
                    row.resize(std::max<std::size_t>(row.size() + 1, 9), ' ');
                    std::cout << row << "dim " << px->total_dim() << "  ";
                    for (const auto& l : layers)
                        std::cout << ' ' << layer_names(p, l);
                    std::cout << '\n';
                }
            }
            return exit_ok;
        });
    }
    throw UsageError("unknown algebra action '" + action + "'");
}

template <Field K>
RepPtr<K> load_module(const std::string& path, const Options& o)
{
    const auto text = read_file(path);
    try {
        const auto alg = o.algebra.empty() ? nullptr : algebra_from_spec(o.algebra);
        return parse_modules<K>(text, alg).main();
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

template <Field K>
void print_map(const ModuleMap<K>& f)
{
    const auto& p = f.source->presentation();
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        const auto& m = f.mats[v];
        if (m.rows() == 0 && m.cols() == 0)
            continue;
        std::cout << "  " << p.vertices()[v] << ": " << m.to_string() << '\n';
    }
}

template <Field K>
int module_action(const std::string& action, const Options& o)
{
    auto need = [&](std::size_t n) {
        if (o.files.size() != n)
            throw UsageError("module " + action + " needs " + std::to_string(n) + " module file(s)");
    };
    if (action == "pd") {
        need(1);
        const auto m = load_module<K>(o.files[0], o);
        const auto rep = projdim(m, o.cutoff, o.trials, o.seed);
        if (o.structured) {
            std::cout << rep.to_json() << '\n';
        } else {
            std::cout << rep.verdict_string() << '\n';
            if (o.verbose)
                for (std::size_t k = 0; k < rep.chain.size(); ++k)
                    std::cout << "  Omega^" << k << ": " << dims_to_string(m->presentation(), rep.chain[k]) << '\n';
        }
        if (rep.verdict == PdReport<K>::Verdict::Inconclusive && o.strict)
            return exit_inconclusive;
        return exit_ok;
    }
    if (action == "syzygy") {
        need(1);
        auto m = load_module<K>(o.files[0], o);
        const auto& p = m->presentation();
        for (std::size_t k = 1; k <= o.times; ++k) {
            m = syzygy(m);
            if (!o.emit && !o.structured)
                std::cout << "Omega^" << k << ": " << dims_to_string(p, m->dims()) << '\n';
            if (o.structured) {
                nlohmann::ordered_json j{{"k", k}, {"dims", m->dims()}, {"field", FieldTraits<K>::name()}};
                std::cout << j.dump() << '\n';
            }
        }
        if (o.emit)
            std::cout << emit_module("Omega" + std::to_string(o.times), *m);
        return exit_ok;
    }
    if (action == "hom") {
        need(2);
        const auto a = load_module<K>(o.files[0], o), b = load_module<K>(o.files[1], o);
        const auto ab = hom_dim(*a, *b), ba = hom_dim(*b, *a);
        if (o.structured) {
            nlohmann::ordered_json j{{"hom_ab", ab}, {"hom_ba", ba}, {"field", FieldTraits<K>::name()}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "dim Hom(A,B) = " << ab << "\ndim Hom(B,A) = " << ba << '\n';
        }
        return exit_ok;
    }
    if (action == "iso") {
        need(2);
        const auto a = load_module<K>(o.files[0], o), b = load_module<K>(o.files[1], o);
        const auto res = certified_iso(a, b, o.trials, o.seed);
        if (o.structured) {
            nlohmann::ordered_json j{{"found", res.found()},
                                     {"describe", res.describe()},
                                     {"field", FieldTraits<K>::name()}};
            if (res.iso)
                j["checksum"] = map_checksum(*res.iso);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << res.describe() << '\n';
            if (res.iso)
                print_map(*res.iso);
        }
        if (res.found())
            return exit_ok;
        return res.sound_negative() ? exit_fail : exit_inconclusive;
    }
    if (action == "split") {
        need(1);
        const auto m = load_module<K>(o.files[0], o);
        const auto s = lemma2_split(m);
        if (o.structured) {
            std::cout << s.to_json() << '\n';
        } else {
            const auto& p = m->presentation();
            std::cout << "X multiplicities:";
            for (auto k : s.x_multiplicity)
                std::cout << ' ' << k;
            std::cout << "\nP(c2) copies: " << s.a << "\nM' dims: " << dims_to_string(p, s.Mprime->dims())
                      << "\ncertificate: " << s.checksum << '\n';
        }
        return exit_ok;
    }
    if (action == "dot") {
        need(1);
        std::cout << to_dot(*load_module<K>(o.files[0], o), "M");
        return exit_ok;
    }
    throw UsageError("unknown module action '" + action + "'");
}

int cmd_verify(const Options& o)
{
    FamilyConfig cfg;
    cfg.r = o.r;
    cfg.m_max = o.m_max;
    cfg.t_max = o.t_max;
    cfg.field = field_of(o);
    cfg.seed = o.seed;
    cfg.cutoff = o.cutoff_set ? o.cutoff : 0;
    cfg.samples = o.samples;
    cfg.max_dim = o.max_dim;
    cfg.trials = o.trials;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<std::string> ids;
    for (const auto& c : o.claims) {
        if (c == "all") {
            ids.insert(ids.end(), claim_ids().begin(), claim_ids().end());
        } else if (std::find(claim_ids().begin(), claim_ids().end(), c) == claim_ids().end()) {
            throw UsageError("unknown claim '" + c + "'");
        } else {
            ids.push_back(c);
        }
    }
    if (ids.empty())
        throw UsageError("name at least one claim, or 'all'");
    bool fail = false, inconclusive = false;
    for (const auto& id : ids) {
        const auto rep = verify(id, cfg);
        std::cout << (o.structured ? rep.to_json(cfg) + "\n" : rep.to_text(o.verbose)) << std::flush;
        fail = fail || rep.status == ClaimStatus::Fail;
        inconclusive = inconclusive || rep.status == ClaimStatus::Inconclusive;
    }
    return fail ? exit_fail : inconclusive ? exit_inconclusive : exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with special biserial algebras and their modules"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "Coefficient field: q or fp:<p>");
    app.add_option("--seed", o.seed, "Seed for randomized steps");
    app.add_flag("--structured", o.structured, "One JSON record per line");
    app.add_flag("--strict", o.strict, "Exit 3 on an inconclusive verdict");
    app.add_flag("-v,--verbose", o.verbose, "More detail in text output");

    auto* alg = app.add_subcommand("algebra", "Presentations and projectives");
    std::string alg_action;
    alg->add_option("action", alg_action, "build | parse | emit | projectives | dot")
        ->required()
        ->check(CLI::IsMember({"build", "parse", "emit", "projectives", "dot"}));
    alg->add_option("files", o.files, "Presentation file");
    alg->add_option("--family", o.family, "lambda or lambda1prime");
    alg->add_option("--r", o.r, "Length parameter r >= 1")->check(CLI::PositiveNumber);
    alg->add_option("--m", o.m, "Level m >= 0")->check(CLI::NonNegativeNumber);
    alg->add_option("--algebra", o.algebra, "lambda:r=1,m=3, lambda1prime:r=1 or file:<path>");
    alg->add_flag("--emit", o.emit, "Print the presentation in file format");

    auto* mod = app.add_subcommand("module", "Homological computations on module files");
    std::string mod_action;
    mod->add_option("action", mod_action, "pd | syzygy | hom | iso | split | dot")
        ->required()
        ->check(CLI::IsMember({"pd", "syzygy", "hom", "iso", "split", "dot"}));
    mod->add_option("files", o.files, "Module files");
    mod->add_option("--algebra", o.algebra, "Read the modules over this algebra");
    mod->add_option("--cutoff", o.cutoff, "Syzygy cutoff for pd")->check(CLI::PositiveNumber);
    mod->add_option("--trials", o.trials, "Random trials for isomorphism search (0: default)");
    mod->add_option("--times", o.times, "Number of syzygies to take")->check(CLI::PositiveNumber);
    mod->add_flag("--emit", o.emit, "Print the last syzygy as a module file");

    auto* ver = app.add_subcommand("verify", "Run family checks");
    ver->add_option("claims", o.claims, "Claim ids or 'all'")->required();
    ver->add_option("--r", o.r, "Length parameter r >= 1");
    ver->add_option("--m-max", o.m_max, "Largest level m");
    ver->add_option("--t-max", o.t_max, "Largest t for the direct system");
    ver->add_option("--samples", o.samples, "Random samples per sampled claim");
    ver->add_option("--max-dim", o.max_dim, "Dimension bound for random modules");
    auto* cut = ver->add_option("--cutoff", o.cutoff, "Syzygy cutoff (default r+m+4)");
    ver->add_option("--trials", o.trials, "Random trials for isomorphism search (0: default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    o.cutoff_set = cut->count() > 0;

    try {
        if (alg->parsed())
            return cmd_algebra(alg_action, o);
        if (mod->parsed())
            return with_field(field_of(o), [&]<class K>() { return module_action<K>(mod_action, o); });
        return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "sbalg: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "sbalg: " << (o.files.empty() ? "" : o.files[0] + ":") << e.what() << '\n';
        return exit_usage;
    } catch (const PresentationError& e) {
        std::cerr << "sbalg: " << e.what() << '\n';
        return exit_usage;
    } catch (const ModuleError& e) {
        std::cerr << "sbalg: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sbalg: " << e.what() << '\n';
        return exit_usage;
    } catch (const CertificateFailure& e) {
        std::cerr << "sbalg: certificate failure: " << e.what() << '\n';
        return exit_fail;
    }
}
