#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "halg/halg.hpp"
#include "halg/verify/crosscheck.hpp"

using namespace halg;

namespace {

struct Config {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<std::string> field;  // --field, else HALG_FIELD
    std::optional<std::string> order;
    std::optional<int> bound;
    std::string format;  // empty: per-command default
    std::string output;
    unsigned jobs = 0;
    std::string module;
    std::string checks = "all";
    std::string questions = "1,2";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// What one input file contributes to a report.
struct FileResult {
    std::vector<CheckOutcome> outcomes;
    std::vector<ModuleSummary> modules;
    std::map<std::string, int> bounds;
    std::vector<std::string> assertions;
    std::string field;
    std::string text;
};

std::string join_numbers(const std::vector<std::int64_t>& v, bool open)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + (open ? ",...]" : "]");
}

std::string show_int(int v)
{
    if (v == kPlusInfinity) return "inf";
    if (v == kMinusInfinity) return "-inf";
    return std::to_string(v);
}

std::string show_finiteness(const Finiteness& f)
{
    return f.finite ? std::to_string(f.value) : "inf";
}

std::string show_hilbert(const HilbertData& h)
{
    if (h.is_zero()) return "0";
    const int d = h.dimension();
    return "(" + h.reduced_numerator().to_string() + ")" + (d > 0 ? "/(1-t)^" + std::to_string(d) : "");
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

TermOrder resolve_order(const Config& cfg, const CorpusFile& f)
{
    if (cfg.order) {
        if (*cfg.order == "degrevlex") return TermOrder::degrevlex;
        if (*cfg.order == "lex") return TermOrder::lex;
        throw UsageError("unknown order '" + *cfg.order + "'");
    }
    return f.order.value_or(TermOrder::degrevlex);
}

FieldSpec resolve_field(const Config& cfg, const CorpusFile& f)
{
    if (cfg.field) return parse_field_spec(*cfg.field);
    if (f.field) return *f.field;
    if (const char* env = std::getenv("HALG_FIELD"); env && *env) return parse_field_spec(env);
    return FieldSpec{};
}

std::vector<std::string> assertions_of(const CorpusFile& f)
{
    std::vector<std::string> out;
    for (const auto& m : f.metas) {
        std::string s = f.name + "/" + m.id + ":";
        if (m.equidimensional) s += std::string(" equidimensional=") + (*m.equidimensional ? "true" : "false");
        if (m.serre) s += " serre_k=" + std::to_string(*m.serre);
        for (const auto& [k, v] : m.expected) s += " " + k + "=" + v;
        out.push_back(s);
    }
    return out;
}

template <class F>
ModuleSummary summarize(Session<F>& session, const Subject<F>& subj, int N)
{
    auto a = session.analyze(subj.module);
    ModuleSummary m{subj.id, a->depth(), a->dim(), {}, {}};
    for (int i = 0; i <= N; ++i) {
        m.betti.push_back(a->betti_at(i));
        m.bass.push_back(a->bass_at(i));
    }
    return m;
}

template <class F>
void run_invariants(const Config& cfg, Session<F>& session, const RingGroup<F>& group, FileResult& r)
{
    const int N = cfg.bound.value_or(session.default_bound(group.ring));
    std::ostringstream out;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& subj : group.subjects) {
        auto p = module_profile(session, subj.module, N);
        auto fam = deficiency_family(session, subj.module);
        out << subj.id << ": g=" << show_int(p.g) << " t=" << show_int(p.t) << " type=" << p.type_value
            << " betti=" << join_numbers(p.betti, true) << " bass=" << join_numbers(p.bass, true) << "\n";
        out << "  cm=" << p.is_cm << " gcm=" << p.is_gcm << " ccm=" << p.is_ccm << " pd=" << show_finiteness(p.pd)
            << " id=" << show_finiteness(p.id) << "\n";
        nlohmann::json defs = nlohmann::json::object();
        for (const auto& [j, K] : fam.modules) {
            auto ka = session.analyze(K);
            if (ka->is_zero()) continue;
            out << "  K^" << j << ": dim=" << show_int(ka->dim()) << " depth=" << show_int(ka->depth())
                << " HS=" << show_hilbert(ka->hilbert()) << "\n";
            defs[std::to_string(j)] = {{"dim", ka->dim()}, {"depth", ka->depth()}, {"hilbert", show_hilbert(ka->hilbert())}};
        }
        doc.push_back({{"module", subj.id}, {"g", p.g}, {"t", p.t}, {"type", p.type_value}, {"betti", p.betti},
                       {"bass", p.bass}, {"cm", p.is_cm}, {"gcm", p.is_gcm}, {"ccm", p.is_ccm},
                       {"pd", p.pd.finite ? nlohmann::json(p.pd.value) : nlohmann::json("inf")},
                       {"id", p.id.finite ? nlohmann::json(p.id.value) : nlohmann::json("inf")}, {"deficiency", defs}});
    }
    r.text = cfg.format == "json" ? doc.dump(2) + "\n" : out.str();
}

template <class F>
void run_deficiency(const Config& cfg, Session<F>& session, const RingGroup<F>& group, FileResult& r)
{
    const Subject<F>* subj = nullptr;
    for (const auto& s : group.subjects)
        if (s.id == group.ring_id + "/" + cfg.module || s.id == cfg.module) subj = &s;
    if (!subj) throw UsageError("no module '" + cfg.module + "' in " + group.ring_id);
    const auto& M = subj->module;
    const auto& S = M.S();
    std::ostringstream out;
    const int t = session.analyze(M)->dim();
    for (int j = 0; j <= static_cast<int>(S.nvars()); ++j) {
        if (j > t) {
            out << "K^" << j << " = 0\n";
            continue;
        }
        auto K = minimal_presentation(deficiency_module(session, M, j));
        auto ka = session.analyze(K);
        if (ka->is_zero()) {
            out << "K^" << j << " = 0\n";
            continue;
        }
        out << "K^" << j << ": generators in degrees";
        for (int d : K.ambient().degrees) out << " " << d;
        out << "\n  relations:";
        if (K.relations().cols() == 0) out << " none";
        for (const auto& v : K.relations().columns) out << "\n    " << to_string(S, v, K.ambient().rank());
        out << "\n  HS=" << show_hilbert(ka->hilbert()) << " dim=" << show_int(ka->dim()) << " depth=" << show_int(ka->depth())
            << "\n";
    }
    r.text = out.str();
}

template <class F>
void run_report(const Config& cfg, Session<F>& session, const RingGroup<F>& group, FileResult& r)
{
    const int N = cfg.bound.value_or(session.default_bound(group.ring));
    r.bounds[group.ring_id] = N;
    if (cfg.command == "verify") {
        auto checks = cfg.checks == "all" ? check_names() : split_list(cfg.checks);
        r.outcomes = verify_group(session, group, checks, cfg.bound);
    } else if (cfg.command == "explore") {
        auto wanted = split_list(cfg.questions);
        for (auto& o : explore_group(session, group, cfg.bound))
            for (const auto& q : wanted)
                if (o.check == "question_" + q) r.outcomes.push_back(std::move(o));
    } else {
        for (const auto& subj : group.subjects)
            for (auto& o : oracle_crosscheck(session, subj)) r.outcomes.push_back(std::move(o));
    }
    if (cfg.format == "markdown")
        for (const auto& subj : group.subjects) r.modules.push_back(summarize(session, subj, N));
}

template <class F>
FileResult run_file(const Config& cfg, const CorpusFile& file, const F& field)
{
    Session<F> session;
    auto group = instantiate(file, field, resolve_order(cfg, file));
    FileResult r;
    r.field = field.name();
    r.assertions = assertions_of(file);
    if (cfg.command == "invariants") run_invariants(cfg, session, group, r);
    else if (cfg.command == "deficiency") run_deficiency(cfg, session, group, r);
    else run_report(cfg, session, group, r);
    return r;
}

FileResult dispatch(const Config& cfg, const CorpusFile& file)
{
    const FieldSpec spec = resolve_field(cfg, file);
    if (spec.rational) return run_file(cfg, file, RationalField());
    return run_file(cfg, file, PrimeField(spec.prime));
}

void validate(const Config& cfg)
{
    if (cfg.command == "verify" && cfg.checks != "all") {
        const auto known = check_names();
        for (const auto& c : split_list(cfg.checks))
            if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");
    }
    if (cfg.command == "explore")
        for (const auto& q : split_list(cfg.questions))
            if (q != "1" && q != "2") throw UsageError("unknown question '" + q + "'");
    if (cfg.bound && *cfg.bound < 0) throw UsageError("--bound must be non-negative");
    if (cfg.field) parse_field_spec(*cfg.field);
    if (cfg.order && *cfg.order != "lex" && *cfg.order != "degrevlex") throw UsageError("unknown order '" + *cfg.order + "'");
}

int execute(const Config& cfg)
{
    validate(cfg);
    std::vector<std::filesystem::path> paths;
    for (const auto& in : cfg.inputs) {
        if (!std::filesystem::exists(in)) throw std::runtime_error(in + ": no such file");
        for (auto& p : corpus_paths(in)) paths.push_back(std::move(p));
    }
    std::vector<CorpusFile> files;
    for (const auto& p : paths) files.push_back(load_corpus_file(p));  // parse everything before computing

    std::vector<FileResult> results(files.size());
    std::vector<std::exception_ptr> errors(files.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency(),
                                                          static_cast<unsigned>(files.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
            try {
                results[i] = dispatch(cfg, files[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::string text;
    bool failed = false;
    if (cfg.command == "invariants" || cfg.command == "deficiency") {
        for (const auto& r : results) text += r.text;
    } else {
        ReportHeader h;
        h.command = cfg.command;
        h.bound = cfg.bound;
        std::vector<CheckOutcome> all;
        std::vector<ModuleSummary> modules;
        std::set<std::string> fields;
        for (auto& r : results) {
            fields.insert(r.field);
            for (auto& o : r.outcomes) all.push_back(std::move(o));
            for (auto& m : r.modules) modules.push_back(std::move(m));
            h.bounds.insert(r.bounds.begin(), r.bounds.end());
            h.assertions.insert(h.assertions.end(), r.assertions.begin(), r.assertions.end());
        }
        h.field = fields.size() == 1 ? *fields.begin() : fields.empty() ? "prime 32003" : "mixed";
        sort_outcomes(all);
        for (const auto& o : all) failed = failed || o.status == Status::fail;
        text = cfg.format == "markdown" ? write_report_markdown(h, all, modules) : write_report_json(h, all);
    }
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw std::runtime_error(cfg.output + ": cannot write");
        out << text;
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"halg: homological invariants of graded modules and checks of their relations"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    std::string field, order;
    int bound = -1;
    app.add_option("--field", field, "rational | prime <p> (default: file, then HALG_FIELD, then prime 32003)");
    app.add_option("--order", order, "degrevlex | lex");
    app.add_option("--bound", bound, "truncation bound N (default s + dim R + 4)");
    app.add_option("--format", cfg.format, "json | markdown (reports); text | json (invariants)")
        ->check(CLI::IsMember({"json", "markdown", "text"}));
    app.add_option("--output,-o", cfg.output, "write to a file instead of stdout");
    app.add_option("--jobs,-j", cfg.jobs, "worker threads, one input file each (default: cores)");

    auto* inv = app.add_subcommand("invariants", "depth, dimension, Betti and Bass numbers, deficiency modules");
    inv->add_option("file", cfg.inputs)->required();
    auto* def = app.add_subcommand("deficiency", "minimal presentations of the deficiency modules of one module");
    def->add_option("file", cfg.inputs)->required();
    def->add_option("--module", cfg.module)->required();
    auto* ver = app.add_subcommand("verify", "run the checkers and write a report");
    ver->add_option("path", cfg.inputs, "file or directory")->required();
    ver->add_option("--checks", cfg.checks, "comma-separated list or 'all'");
    auto* exp = app.add_subcommand("explore", "evaluate both sides of the two open questions");
    exp->add_option("path", cfg.inputs, "file or directory")->required();
    exp->add_option("--questions", cfg.questions, "1, 2 or 1,2");
    auto* orc = app.add_subcommand("oracle", "cross-check the engine against degreewise linear algebra");
    orc->add_option("path", cfg.inputs, "file or directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!field.empty()) cfg.field = field;
    if (!order.empty()) cfg.order = order;
    if (bound >= 0) cfg.bound = bound;
    if (cfg.format == "text" && cfg.command != "invariants" && cfg.command != "deficiency") {
        std::cerr << "error: --format text only applies to invariants and deficiency\n";
        return 2;
    }
    try {
        return execute(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
