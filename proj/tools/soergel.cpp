// Command line front end: KL, parabolic KL and inverse parabolic KL tables,
// Rouquier shapes, Hom ranks, Bott-Samelson decompositions and the invariant
// suites.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soergel/error.hpp"
#include "soergel/render.hpp"
#include "soergel/rouquier.hpp"
#include "soergel/soergel_char.hpp"
#include "soergel/verify.hpp"

using namespace soergel;

namespace {

constexpr int exit_invariant = 1;
constexpr int exit_input = 2;

struct Config {
    std::string type;
    std::string matrix;
    std::string subset;
    std::string format = "tsv";
    std::size_t cap = CoxeterSystem::default_cap;
};

struct Context {
    std::shared_ptr<const CoxeterSystem> system;
    std::shared_ptr<const HeckeAlgebra> algebra;
    GeneratorSet subset;
    bool json = false;

    const CoxeterSystem& W() const { return *system; }
};

void add_system_options(CLI::App* cmd, Config& cfg, bool with_subset = true)
{
    auto* type = cmd->add_option("--type", cfg.type, "Named finite type, e.g. A3, B3, I2(5), A1xA1");
    auto* matrix = cmd->add_option("--matrix", cfg.matrix, "File with rank and upper triangular bond labels")
                       ->check(CLI::ExistingFile);
    type->excludes(matrix);
    if (with_subset)
        cmd->add_option("--subset", cfg.subset, "Finitary subset I as generator labels, e.g. s1,s2");
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--cap", cfg.cap, "Largest group order to enumerate")->check(CLI::PositiveNumber);
}

Context make_context(const Config& cfg)
{
    if (cfg.type.empty() == cfg.matrix.empty())
        throw InvalidInput("exactly one of --type or --matrix is required");
    CoxeterMatrix matrix = [&] {
        if (!cfg.type.empty())
            return CoxeterMatrix::named(cfg.type);
        std::ifstream in(cfg.matrix);
        if (!in)
            throw InvalidInput("cannot open " + cfg.matrix);
        return CoxeterMatrix::parse(in);
    }();
    Context ctx;
    ctx.system = std::make_shared<const CoxeterSystem>(CoxeterSystem::build(matrix, cfg.cap));
    ctx.algebra = std::make_shared<const HeckeAlgebra>(ctx.system);
    ctx.subset = ctx.system->parse_subset(cfg.subset);
    ctx.json = cfg.format == "json";
    return ctx;
}

// Rows of (first word, second word, polynomial).
void emit_pairs(const Context& ctx, const std::vector<std::string>& header,
                const std::vector<std::tuple<Element, Element, LaurentPoly>>& rows)
{
    const CoxeterSystem& W = ctx.W();
    if (ctx.json) {
        Json out = Json::array();
        for (const auto& [a, b, p] : rows)
            out.push_back({{header[0], W.word_string(a)}, {header[1], W.word_string(b)}, {"poly", to_json(p)}});
        std::cout << out.dump(2) << '\n';
        return;
    }
    std::cout << header[0] << '\t' << header[1] << "\tpoly\n";
    for (const auto& [a, b, p] : rows)
        std::cout << W.word_string(a) << '\t' << W.word_string(b) << '\t' << p << '\n';
}

int cmd_kl(const Config& cfg)
{
    const Context ctx = make_context(cfg);
    const CoxeterSystem& W = ctx.W();
    std::vector<std::tuple<Element, Element, LaurentPoly>> rows;
    for (Element x : W.elements())
        for (Element y : W.elements())
            if (W.bruhat_leq(y, x))
                rows.emplace_back(y, x, ctx.algebra->kl_poly(y, x));
    emit_pairs(ctx, {"y", "x"}, rows);
    return 0;
}

int cmd_parabolic(const Config& cfg)
{
    const Context ctx = make_context(cfg);
    const ParabolicModule M(ctx.algebra, ctx.subset);
    std::vector<std::tuple<Element, Element, LaurentPoly>> rows;
    for (Element x : M.min_reps())
        for (Element y : M.min_reps())
            if (ctx.W().bruhat_leq(y, x))
                rows.emplace_back(y, x, M.parabolic_kl_poly(y, x));
    emit_pairs(ctx, {"y", "x"}, rows);
    return 0;
}

int cmd_inverse(const Config& cfg)
{
    const Context ctx = make_context(cfg);
    const ParabolicModule M(ctx.algebra, ctx.subset);
    std::vector<std::tuple<Element, Element, LaurentPoly>> rows;
    for (Element z : M.min_reps())
        for (Element x : M.min_reps())
            if (ctx.W().bruhat_leq(x, z))
                rows.emplace_back(x, z, M.inverse_parabolic_kl(x, z));
    emit_pairs(ctx, {"x", "z"}, rows);
    return 0;
}

int cmd_shape(const Config& cfg, const std::string& word, const std::string& kind)
{
    const Context ctx = make_context(cfg);
    const ParabolicModule M(ctx.algebra, ctx.subset);
    const Element x = ctx.W().parse_word(word);
    const ComplexShape shape = kind == "e" ? e_shape(M, x) : f_shape(M, x);
    if (ctx.json)
        std::cout << to_json(ctx.W(), shape).dump(2) << '\n';
    else
        std::cout << render_text(ctx.W(), shape);
    return 0;
}

int cmd_hom(const Config& cfg, const std::string& a, const std::string& b)
{
    const Context ctx = make_context(cfg);
    const ParabolicModule M(ctx.algebra, ctx.subset);
    const Element x = ctx.W().parse_word(a);
    const Element y = ctx.W().parse_word(b);
    const LaurentPoly rank = graded_hom_rank(M, delta(M, x), delta(M, y));
    if (ctx.json)
        std::cout << Json{{"x", ctx.W().word_string(x)}, {"y", ctx.W().word_string(y)}, {"poly", to_json(rank)}}.dump(2)
                  << '\n';
    else
        std::cout << rank << '\n';
    return 0;
}

void emit_character(const Context& ctx, const Character& c)
{
    const CoxeterSystem& W = ctx.W();
    const bool perverse = is_perverse(c);
    if (ctx.json) {
        Json out = to_json(W, c);
        out["perverse"] = perverse;
        std::cout << out.dump(2) << '\n';
        return;
    }
    std::cout << "word\tpoly\n";
    for (const auto& [y, m] : c.coeffs)
        std::cout << W.word_string(y) << '\t' << m << '\n';
    std::cout << (perverse ? "perverse" : "not perverse") << '\n';
}

int cmd_bs(const Config& cfg, const std::string& word)
{
    const Context ctx = make_context(cfg);
    const ParabolicModule M(ctx.algebra, ctx.subset);
    // Not necessarily reduced, so read the letters one at a time.
    Word letters;
    std::istringstream in(word);
    for (std::string label; std::getline(in, label, '.');)
        if (!label.empty() && label != "e")
            letters.push_back(ctx.W().parse_subset(label).members().front());
    emit_character(ctx, bott_samelson_char(M, letters));
    return 0;
}

int cmd_example(const Config& cfg)
{
    Config fixed = cfg;
    fixed.type = "A3";
    fixed.matrix.clear();
    fixed.subset = "s1,s2";
    const Context ctx = make_context(fixed);
    const ParabolicModule M(ctx.algebra, ctx.subset);
    emit_character(ctx, bott_samelson_char(M, Word{0, 1, 2}));
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& suites)
{
    const Context ctx = make_context(cfg);
    std::vector<std::string> names;
    if (suites.empty() || suites == "all") {
        names = Verifier::suite_names();
    } else {
        std::istringstream in(suites);
        for (std::string name; std::getline(in, name, ',');)
            names.push_back(name);
    }
    Verifier verifier(ctx.algebra);
    bool all_passed = true;
    Json report = Json::array();
    for (const std::string& name : names) {
        const SuiteResult r = verifier.run(name);
        all_passed = all_passed && r.passed();
        if (ctx.json) {
            report.push_back({{"suite", r.name},
                              {"checked", r.checked},
                              {"failed", r.failed},
                              {"counterexample", r.counterexample ? Json(*r.counterexample) : Json()}});
        } else {
            std::cout << (r.passed() ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.checked - r.failed << '/'
                      << r.checked;
            if (r.counterexample)
                std::cout << '\t' << *r.counterexample;
            std::cout << '\n';
        }
    }
    if (ctx.json)
        std::cout << report.dump(2) << '\n';
    return all_passed ? 0 : exit_invariant;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kazhdan-Lusztig combinatorics of singular Soergel bimodules"};
    app.require_subcommand(1);

    Config cfg;
    std::string word, other, kind = "f", suites;

    auto* kl = app.add_subcommand("kl", "KL polynomials h(y, x) for all y <= x");
    add_system_options(kl, cfg, false);

    auto* parabolic = app.add_subcommand("parabolic", "Parabolic KL polynomials h^I(y, x)");
    add_system_options(parabolic, cfg);

    auto* inverse = app.add_subcommand("inverse", "Inverse parabolic KL polynomials g^I(x, z)");
    add_system_options(inverse, cfg);

    auto* shape = app.add_subcommand("shape", "Graded shape of the Rouquier complex F_x^I or E_x^I");
    add_system_options(shape, cfg);
    shape->add_option("--x", word, "Minimal coset representative as a word, e.g. s1.s2")->required();
    shape->add_option("--kind", kind, "f or e")->check(CLI::IsMember({"f", "e"}));

    auto* hom = app.add_subcommand("hom", "Graded rank of Hom(B_x^I, B_y^I)");
    add_system_options(hom, cfg);
    hom->add_option("--x", word, "First index")->required();
    hom->add_option("--y", other, "Second index")->required();

    auto* bs = app.add_subcommand("bs", "Decompose the Bott-Samelson character of a word");
    add_system_options(bs, cfg);
    bs->add_option("--word", word, "Generator sequence, e.g. s1.s2.s3 (e for empty)")->required();

    auto* example = app.add_subcommand("example", "The A3 decomposition for I = {s1,s2} and the word s1.s2.s3");
    example->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run invariant suites; exit 1 if any fails");
    add_system_options(verify, cfg, false);
    verify->add_option("--suite", suites, "Comma separated suite names, or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*kl)
            return cmd_kl(cfg);
        if (*parabolic)
            return cmd_parabolic(cfg);
        if (*inverse)
            return cmd_inverse(cfg);
        if (*shape)
            return cmd_shape(cfg, word, kind);
        if (*hom)
            return cmd_hom(cfg, word, other);
        if (*bs)
            return cmd_bs(cfg, word);
        if (*example)
            return cmd_example(cfg);
        if (*verify)
            return cmd_verify(cfg, suites);
    } catch (const UnsupportedBond& e) {
        std::cerr << "error: unsupported bond: " << e.what() << '\n';
        return exit_input;
    } catch (const GroupTooLarge& e) {
        std::cerr << "error: group too large: " << e.what() << '\n';
        return exit_input;
    } catch (const NotDivisible& e) {
        std::cerr << "error: not divisible: " << e.what() << '\n';
        return exit_input;
    } catch (const NotInIdeal& e) {
        std::cerr << "error: not in ideal: " << e.what() << '\n';
        return exit_input;
    } catch (const Error& e) {
        std::cerr << "error: invalid input: " << e.what() << '\n';
        return exit_input;
    } catch (const std::logic_error& e) {
        std::cerr << "error: invariant violated: " << e.what() << '\n';
        return exit_invariant;
    }
    return exit_input;
}
