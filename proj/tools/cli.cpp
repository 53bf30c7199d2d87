#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include "chordal/betti.hpp"
#include "chordal/chordality.hpp"
#include "chordal/error.hpp"
#include "chordal/io.hpp"
#include "chordal/special_classes.hpp"

namespace chordal::cli {

namespace {

constexpr const char* kFormatHelp = R"(Input formats
  Complex (JSON, first non-blank character '{'):
    {"n": 5, "facets": [[2,5],[1,4,5],[1,2,3,4]]}
    labels are integers 1..n, n <= 64
    the VOID complex (no faces):   {"n": 3, "facets": null}
    the complex {emptyset}:        {"n": 3, "facets": [[]]}
    optional "vertices": [..] sets a ground set other than [n]
  Square-free ideal (text, anything else):
    n=5          optional header, must come first
    # comment
    x3 x5        one monomial per line, variables separated by
    x1*x2*x5     blanks or '*'; a line "1" is the unit monomial
    Only `sigma` accepts exponents such as x1^2*x2.
  Certificate (JSON, for `verify --certificate`):
    {"kind": "simplicial_order", "d": 2, "faces": [[1,5],[1,2]]}
    {"kind": "collapse", "d": 1, "faces": [[4],[3],[2],[1]]}
  Each command converts its input as needed: an ideal I stands for the
  complex N(I), a complex on [n] for its Stanley-Reisner ideal.

Exit status
  0 computed (verdict true), 1 verdict false, 2 input error,
  3 search budget exhausted (verdict unknown).)";

struct Config {
    std::string input = "-";
    std::string field = "gf2";
    std::string format = "json";
    long long budget = 10'000'000;
    unsigned workers = 1;
    int d = 0;
    bool certificates = false;
    bool no_prune = false;
    std::string certificate_path;
    std::optional<std::uint64_t> seed;
    int trials = 200;
    int vertices = 6;
};

using Input = std::variant<SimplicialComplex, SquarefreeIdeal>;

std::string read_text(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file \"" + path + "\"");
    buffer << file.rdbuf();
    return buffer.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Input parse_input(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return complex_from_json(parse_json(text));
    return parse_squarefree_ideal(text);
}

SimplicialComplex as_complex(const Input& input) {
    if (const auto* c = std::get_if<SimplicialComplex>(&input)) return *c;
    return stanley_reisner_complex(std::get<SquarefreeIdeal>(input));
}

SquarefreeIdeal as_ideal(const Input& input) {
    if (const auto* i = std::get_if<SquarefreeIdeal>(&input)) return *i;
    const auto& c = std::get<SimplicialComplex>(input);
    if (c.ground() != Face::range(c.n()))
        throw InputError("the Stanley-Reisner ideal needs a complex on the full vertex set [n]");
    return stanley_reisner_ideal(c);
}

std::vector<Field> parse_fields(const std::string& text) {
    if (text == "gf2") return {Field::gf2()};
    if (text == "char0" || text == "qq") return {Field::char0()};
    if (text == "both") return {Field::gf2(), Field::char0()};
    std::string digits;
    if (text.rfind("gfp:", 0) == 0)
        digits = text.substr(4);
    else if (text.rfind("gf", 0) == 0)
        digits = text.substr(2);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 12)
        return {Field::gfp(std::stoull(digits))};
    throw InputError("unknown field \"" + text + "\" (use gf2, gfp:<prime>, char0 or both)");
}

SearchOptions search_options(const Config& cfg) {
    SearchOptions o;
    o.node_budget = cfg.budget;
    o.prune_maximal_free_faces = !cfg.no_prune;
    o.workers = std::max(1u, cfg.workers);
    return o;
}

std::string complex_pretty_lines(const SimplicialComplex& c) {
    if (c.is_void()) return "VOID";
    std::string s;
    for (Face f : c.facets()) s += (s.empty() ? "" : " ") + f.to_string();
    return s;
}

class Runner {
public:
    Runner(const Config& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

    void emit(const Json& j) {
        if (cfg_.format == "pretty")
            out_ << j.dump(2) << "\n";
        else
            out_ << j.dump() << "\n";
    }

    Input input() { return parse_input(read_text(cfg_.input, in_)); }

    int require_d() const {
        if (cfg_.d < 1) throw InputError("--d must be a positive integer");
        return cfg_.d;
    }

    int closure() {
        const SimplicialComplex c = d_closure(as_complex(input()), require_d());
        if (cfg_.format == "pretty")
            out_ << complex_pretty_lines(c) << "\n";
        else
            emit(to_json(c));
        return kOk;
    }

    int chordal() {
        const SimplicialComplex c = as_complex(input());
        const SearchOptions opts = search_options(cfg_);
        Json j;
        if (cfg_.d >= 1) {
            auto cert = d_chordal_certificate(c, cfg_.d, opts);
            j["d"] = cfg_.d;
            j["chordal"] = cert.has_value();
            if (cert) j["certificate"] = to_json(*cert);
            emit(j);
            return cert ? kOk : kNegative;
        }
        const ChordalityReport report = chordality(c, opts);
        j["chordal"] = report.chordal;
        j["checked_d"] = report.checked_d;
        if (report.failed_d) j["failed_d"] = *report.failed_d;
        if (cfg_.certificates) {
            Json certs = Json::array();
            for (const FreeSequence& s : report.certificates) certs.push_back(to_json(s));
            j["certificates"] = std::move(certs);
        }
        emit(j);
        return report.chordal ? kOk : kNegative;
    }

    int collapsible() {
        const SimplicialComplex c = as_complex(input());
        auto seq = find_d_collapse(c, require_d(), search_options(cfg_));
        Json j;
        j["collapsible"] = seq.has_value();
        if (seq) j["certificate"] = to_json(*seq);
        emit(j);
        return seq ? kOk : kNegative;
    }

    int verify() {
        if (cfg_.certificate_path.empty()) throw InputError("verify needs --certificate <file>");
        const SimplicialComplex c = as_complex(input());
        std::ifstream file(cfg_.certificate_path);
        if (!file) throw InputError("cannot open certificate file \"" + cfg_.certificate_path + "\"");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        const FreeSequence seq = sequence_from_json(parse_json(buffer.str()));
        // A simplicial order certifies Δ_d(Γ); replay it there.
        SimplicialComplex target = c;
        if (seq.kind == FreeSequence::Kind::SimplicialOrder && seq.d >= 1 && !c.is_void())
            target = d_closure(c, seq.d);
        const bool ok = verify_sequence(target, seq);
        emit(Json{{"valid", ok}});
        return ok ? kOk : kNegative;
    }

    int betti() {
        const SquarefreeIdeal ideal = as_ideal(input());
        const std::vector<Field> fields = parse_fields(cfg_.field);
        std::vector<BettiTable> tables;
        for (Field f : fields) tables.push_back(betti_table(ideal, f, cfg_.workers));
        if (cfg_.format == "pretty") {
            for (const BettiTable& t : tables) out_ << format_betti_table(t);
            return kOk;
        }
        if (tables.size() == 1) {
            emit(to_json(tables.front()));
            return kOk;
        }
        Json all = Json::array();
        for (const BettiTable& t : tables) all.push_back(to_json(t));
        const bool agree = std::all_of(tables.begin(), tables.end(), [&](const BettiTable& t) {
            return t.entries() == tables.front().entries();
        });
        emit(Json{{"tables", std::move(all)}, {"agree", agree}});
        return kOk;
    }

    int linres() {
        SquarefreeIdeal ideal = as_ideal(input());
        if (cfg_.d >= 1) ideal = degree_component(ideal, cfg_.d);
        if (ideal.is_zero()) throw PreconditionError("linear resolution test on the zero ideal");
        Json j;
        j["degree"] = ideal.min_degree();
        Json per_field;
        bool all = true;
        for (Field f : parse_fields(cfg_.field)) {
            const bool lin = has_linear_resolution(ideal, f, cfg_.workers);
            per_field[f.name()] = lin;
            all = all && lin;
        }
        j["linear"] = std::move(per_field);
        emit(j);
        return all ? kOk : kNegative;
    }

    int cwl() {
        const SquarefreeIdeal ideal = as_ideal(input());
        Json per_field;
        bool all = true;
        for (Field f : parse_fields(cfg_.field)) {
            const bool v = is_componentwise_linear(ideal, f, cfg_.workers);
            per_field[f.name()] = v;
            all = all && v;
        }
        emit(Json{{"componentwise_linear", std::move(per_field)}});
        return all ? kOk : kNegative;
    }

    int classify() {
        const Input in = input();
        const SquarefreeIdeal ideal = as_ideal(in);
        const SimplicialComplex nerve = as_complex(in);
        const SimplicialComplex dual = alexander_dual(nerve);
        Json j;
        j["stable"] = is_squarefree_stable(ideal);
        j["strongly_stable"] = is_squarefree_strongly_stable(ideal);
        j["shifted"] = is_shifted(dual);
        j["vertex_decomposable"] = is_vertex_decomposable(dual);
        j["gotzmann"] = gotzmann_decomposition(ideal).has_value();
        j["chordal"] = is_chordal(nerve, search_options(cfg_));
        j["componentwise_linear"] = {
            {"gf2", is_componentwise_linear(ideal, Field::gf2(), cfg_.workers)},
            {"char0", is_componentwise_linear(ideal, Field::char0(), cfg_.workers)},
        };
        emit(j);
        return kOk;
    }

    int dual() {
        const SimplicialComplex c = alexander_dual(as_complex(input()));
        if (cfg_.format == "pretty")
            out_ << complex_pretty_lines(c) << "\n";
        else
            emit(to_json(c));
        return kOk;
    }

    int nonfaces() {
        const SimplicialComplex c = as_complex(input());
        const std::vector<Face> faces = minimal_nonfaces(c);
        if (cfg_.format == "pretty") {
            if (c.ground() == Face::range(c.n()))
                out_ << format_ideal(SquarefreeIdeal(c.n(), faces));
            else
                for (Face f : faces) out_ << f.to_string() << "\n";
            return kOk;
        }
        Json list = Json::array();
        for (Face f : faces) list.push_back(face_to_json(f));
        emit(Json{{"nonfaces", std::move(list)}});
        return kOk;
    }

    int sigma() {
        const MonomialIdeal j = parse_monomial_ideal(read_text(cfg_.input, in_));
        auto [image, nerve] = sigma_pipeline(j);
        if (cfg_.format == "pretty") {
            out_ << format_ideal(image);
            return kOk;
        }
        Json gens = Json::array();
        for (Face g : image.generators()) gens.push_back(face_to_json(g));
        emit(Json{{"n", image.n()}, {"generators", std::move(gens)}, {"complex", to_json(nerve)}});
        return kOk;
    }

    // Randomized probe: for d-chordal closures Δ and non-facet simplicial
    // faces E, is Δ with E face-deleted still d-chordal?
    int experiment_q2() {
        if (!cfg_.seed) throw InputError("experiment q2 needs an explicit --seed");
        if (cfg_.vertices < 1 || cfg_.vertices > 10) throw InputError("--vertices must lie in 1..10");
        std::mt19937_64 rng(*cfg_.seed);
        const int n = cfg_.vertices;
        const SearchOptions opts = search_options(cfg_);
        long long closures = 0, chordal_closures = 0, deletions = 0, still = 0;
        Json counterexamples = Json::array();
        for (int t = 0; t < cfg_.trials; ++t) {
            const int d = cfg_.d >= 1 ? cfg_.d : 1 + static_cast<int>(rng() % 3);
            std::vector<Face> facets;
            const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 2));
            for (int k = 0; k < count; ++k)
                facets.push_back(Face::from_mask(rng() & Face::range(n).mask()));
            const SimplicialComplex closure = d_closure(SimplicialComplex::from_facets(n, facets), d);
            ++closures;
            if (!find_simplicial_order(closure, d, opts)) continue;
            ++chordal_closures;
            for (Face e : simplicial_faces(closure, d)) {
                if (closure.is_facet(e)) continue;
                ++deletions;
                if (find_simplicial_order(face_deletion(closure, e), d, opts)) {
                    ++still;
                } else if (counterexamples.size() < 5) {
                    counterexamples.push_back(
                        {{"d", d}, {"complex", to_json(closure)}, {"face", face_to_json(e)}});
                }
            }
        }
        Json j;
        j["seed"] = *cfg_.seed;
        j["trials"] = cfg_.trials;
        j["vertices"] = n;
        j["closures"] = closures;
        j["d_chordal_closures"] = chordal_closures;
        j["simplicial_deletions"] = deletions;
        j["still_d_chordal"] = still;
        j["counterexamples"] = std::move(counterexamples);
        emit(j);
        return kOk;
    }

private:
    const Config& cfg_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Chordality, collapsibility and Betti tables of simplicial complexes and square-free monomial ideals",
                 "chordal"};
    app.footer(kFormatHelp);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", cfg.field, "gf2 | gfp:<prime> | char0 | both")->capture_default_str();
    app.add_option("--format", cfg.format, "json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}))
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

    std::vector<std::pair<CLI::App*, std::function<int(Runner&)>>> commands;
    auto add = [&](const std::string& name, const std::string& help, std::function<int(Runner&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", cfg.input, "input file, '-' for stdin")->capture_default_str();
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };

    add("closure", "d-closure of a complex", &Runner::closure)->add_option("--d", cfg.d, "d >= 1")->required();
    {
        CLI::App* sub = add("chordal", "chordality verdict (or d-chordality with --d)", &Runner::chordal);
        sub->add_option("--d", cfg.d, "decide d-chordality for this d only");
        sub->add_flag("--certificates", cfg.certificates, "include simplicial orders");
    }
    {
        CLI::App* sub = add("collapsible", "d-collapsibility with a certificate", &Runner::collapsible);
        sub->add_option("--d", cfg.d, "d >= 1")->required();
        sub->add_flag("--no-prune", cfg.no_prune, "branch on every free face");
    }
    add("verify", "replay a certificate against the input complex", &Runner::verify)
        ->add_option("--certificate", cfg.certificate_path, "certificate JSON file")
        ->required();
    add("betti", "graded Betti table via Hochster's formula", &Runner::betti);
    add("linres", "linear resolution test (of I_[d] with --d)", &Runner::linres)
        ->add_option("--d", cfg.d, "test the degree-d square-free component");
    add("cwl", "componentwise linearity", &Runner::cwl);
    add("classify", "membership in the special classes", &Runner::classify);
    add("dual", "Alexander dual", &Runner::dual);
    add("nonfaces", "minimal nonfaces", &Runner::nonfaces);
    add("sigma", "square-free operator on a strongly stable ideal", &Runner::sigma);

    CLI::App* experiment = app.add_subcommand("experiment", "randomized experiments (report only)");
    experiment->require_subcommand(1);
    CLI::App* q2 = experiment->add_subcommand("q2", "does deleting a simplicial face keep a closure d-chordal?");
    q2->add_option("--seed", cfg.seed, "random seed (required)")->required();
    q2->add_option("--trials", cfg.trials, "random complexes")->check(CLI::Range(1, 1'000'000))->capture_default_str();
    q2->add_option("--vertices", cfg.vertices, "vertex count")->capture_default_str();
    q2->add_option("--d", cfg.d, "fix d instead of drawing it from 1..3");
    commands.emplace_back(q2, &Runner::experiment_q2);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Runner runner(cfg, in, out);
    try {
        for (auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(runner);
        err << "no command given\n";
        return kInputError;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetExhausted;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace chordal::cli
