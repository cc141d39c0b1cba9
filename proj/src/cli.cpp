// cli.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locus/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>

#include "locus/inclusion.hpp"
#include "locus/io.hpp"
#include "locus/local.hpp"
#include "locus/reduction.hpp"
#include "locus/regex.hpp"

namespace locus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// LOCUS_STATE_CAP, parsed strictly. Unset yields nullopt; anything but a
/// positive decimal integer is an input error.
std::optional<std::uint64_t> env_state_cap() {
    const char* raw = std::getenv("LOCUS_STATE_CAP");
    if (raw == nullptr) return std::nullopt;
    const std::string text(raw);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("LOCUS_STATE_CAP must be a positive integer");
    }
    std::uint64_t value = 0;
    try {
        value = std::stoull(text);
    } catch (const std::out_of_range&) {
        throw InputError("LOCUS_STATE_CAP must be a positive integer");
    }
    if (value == 0) {
        throw InputError("LOCUS_STATE_CAP must be a positive integer");
    }
    return value;
}

InclusionConfig make_config(InclusionEngine engine = InclusionEngine::antichain) {
    InclusionConfig cfg;
    cfg.engine = engine;
    if (const auto cap = env_state_cap()) cfg.state_pair_cap = *cap;
    return cfg;
}

Json stats_json(std::uint64_t explored, double elapsed_ms) {
    Json j = Json::object();
    j["explored"] = explored;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

Json cartesian_to_json(const CartesianWitness& w) {
    Json j = Json::object();
    j["pivot"] = w.pivot.token;
    j["alpha"] = word_to_json(w.alpha);
    j["beta"] = word_to_json(w.beta);
    j["gamma"] = word_to_json(w.gamma);
    j["delta"] = word_to_json(w.delta);
    return j;
}

/// Report for the yes/no commands: verdict decides the exit code, a false
/// verdict prints its witness.
int finish_check(const std::string& command, const CheckReport& report,
                 const Json& inputs, bool json, const char* yes, const char* no,
                 std::ostream& out) {
    if (json) {
        Json rep = Json::object();
        rep["command"] = command;
        rep["verdict"] = report.verdict;
        if (report.witness) rep["witness"] = word_to_json(*report.witness);
        rep["stats"] = stats_json(report.stats.explored, report.stats.elapsed_ms);
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << (report.verdict ? yes : no);
        if (!report.verdict && report.witness) {
            out << " (witness: " << to_string(*report.witness) << ")";
        }
        out << '\n';
    }
    return report.verdict ? 0 : 1;
}

int run_check_local(const std::string& path, bool dfa_mode, bool json,
                    std::ostream& out) {
    Json inputs = Json::object();
    inputs["file"] = path;
    inputs["dfa"] = dfa_mode;
    if (dfa_mode) {
        const Dfa d = dfa_from_json(load_json(path));
        return finish_check("check-local", is_local_dfa(d), inputs, json, "local",
                            "not local", out);
    }
    const Nfa a = nfa_from_json(load_json(path));
    return finish_check("check-local", is_local_nfa(a, make_config()), inputs, json,
                        "local", "not local", out);
}

int run_check_universal(const std::string& path, bool json, std::ostream& out) {
    const Nfa a = nfa_from_json(load_json(path));
    Json inputs = Json::object();
    inputs["file"] = path;
    return finish_check("check-universal", universality(a, make_config()), inputs,
                        json, "universal", "not universal", out);
}

int run_check_inclusion(const std::string& path_b, const std::string& path_a,
                        const std::string& engine, bool json, std::ostream& out) {
    const Nfa b = nfa_from_json(load_json(path_b));
    const Nfa a = nfa_from_json(load_json(path_a));
    const InclusionConfig cfg =
        make_config(engine == "oracle" ? InclusionEngine::determinize_oracle
                                       : InclusionEngine::antichain);
    Json inputs = Json::object();
    inputs["b"] = path_b;
    inputs["a"] = path_a;
    inputs["engine"] = engine;
    return finish_check("check-inclusion", inclusion(b, a, cfg), inputs, json,
                        "included", "not included", out);
}

int run_check_infix_free(const std::string& path, bool json, std::ostream& out) {
    const Nfa a = nfa_from_json(load_json(path));
    Json inputs = Json::object();
    inputs["file"] = path;
    return finish_check("check-infix-free", is_infix_free(a), inputs, json,
                        "infix-free", "not infix-free", out);
}

Json summary_record(const ReductionSummary& s) {
    Json record = Json::object();
    record["universal"] = s.universal;
    record["gadget_local"] = s.gadget_local;
    record["gadget_infix_free"] = s.gadget_infix_free;
    return record;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int run_verify_reduction(const std::string& path, bool json, std::ostream& out) {
    const auto start = Clock::now();
    const Nfa seed = nfa_from_json(load_json(path));
    const ReductionSummary s = verify_reduction(seed, make_config());
    if (json) {
        Json rep = Json::object();
        rep["command"] = "verify-reduction";
        rep["verdict"] = s.consistent;
        rep["record"] = summary_record(s);
        rep["stats"] = stats_json(0, ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << (s.consistent ? "consistent" : "inconsistent") << " (universal: "
            << yes_no(s.universal) << ", gadget local: " << yes_no(s.gadget_local)
            << ", gadget infix-free: " << yes_no(s.gadget_infix_free) << ")\n";
    }
    return s.consistent ? 0 : 1;
}

struct CorpusRow {
    std::string file;
    std::string status;  // consistent | inconsistent | input-error | resource-limit
    Json record;
    std::string error;
};

int run_corpus(const std::string& dir, unsigned jobs, bool json, std::ostream& out) {
    namespace fs = std::filesystem;
    const auto start = Clock::now();

    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) {
        throw InputError(dir + ": cannot read directory");
    }
    std::vector<std::string> files;
    for (const fs::directory_entry& entry : it) {
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw InputError(dir + ": no .json files in corpus directory");
    }

    const InclusionConfig cfg = make_config();
    std::vector<CorpusRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
            rows[i].file = files[i];
            try {
                const Nfa seed = nfa_from_json(load_json(files[i]));
                const ReductionSummary s = verify_reduction(seed, cfg);
                rows[i].record = summary_record(s);
                rows[i].status = s.consistent ? "consistent" : "inconsistent";
            } catch (const ResourceLimitError& e) {
                rows[i].status = "resource-limit";
                rows[i].error = e.what();
            } catch (const std::exception& e) {
                rows[i].status = "input-error";
                rows[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t threads =
        std::min<std::size_t>(jobs == 0 ? 1 : jobs, files.size());
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::size_t consistent = 0, inconsistent = 0, input_errors = 0, limits = 0;
    for (const CorpusRow& row : rows) {
        if (row.status == "consistent") ++consistent;
        if (row.status == "inconsistent") ++inconsistent;
        if (row.status == "input-error") ++input_errors;
        if (row.status == "resource-limit") ++limits;
    }
    const bool all_good = consistent == rows.size();

    if (json) {
        Json rep = Json::object();
        rep["command"] = "verify-reduction";
        rep["verdict"] = all_good;
        Json listed = Json::array();
        for (const CorpusRow& row : rows) {
            Json r = Json::object();
            r["file"] = row.file;
            r["status"] = row.status;
            if (!row.record.is_null()) r["record"] = row.record;
            if (!row.error.empty()) r["error"] = row.error;
            listed.push_back(std::move(r));
        }
        rep["files"] = std::move(listed);
        rep["stats"] = stats_json(rows.size(), ms_since(start));
        Json inputs = Json::object();
        inputs["corpus"] = dir;
        inputs["jobs"] = jobs;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        for (const CorpusRow& row : rows) {
            out << row.file << ": " << row.status;
            if (!row.error.empty()) out << " (" << row.error << ")";
            out << '\n';
        }
        out << files.size() << " files: " << consistent << " consistent, "
            << inconsistent << " inconsistent, " << (input_errors + limits)
            << " errors\n";
    }

    if (limits > 0) return 3;
    if (input_errors > 0) return 2;
    if (inconsistent > 0) return 1;
    return 0;
}

int run_gadget(const std::string& path, const std::string& output, bool json,
               std::ostream& out) {
    const auto start = Clock::now();
    const Nfa seed = nfa_from_json(load_json(path));
    const GadgetOutput g = greibach_gadget(seed);
    store_json(output, gadget_to_json(g));
    if (json) {
        Json rep = Json::object();
        rep["command"] = "gadget";
        rep["states"] = g.automaton.state_count();
        Json fresh = Json::object();
        fresh["a"] = g.fresh_symbols.pad.token;
        fresh["h1"] = g.fresh_symbols.open.token;
        fresh["h2"] = g.fresh_symbols.mid.token;
        fresh["h3"] = g.fresh_symbols.close.token;
        rep["fresh_symbols"] = std::move(fresh);
        rep["stats"] = stats_json(g.automaton.state_count(), ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        inputs["output"] = output;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << "gadget written to " << output << " (" << g.automaton.state_count()
            << " states)\n";
    }
    return 0;
}

int run_closure(const std::string& path, const std::string& output, bool json,
                std::ostream& out) {
    const auto start = Clock::now();
    const Nfa a = nfa_from_json(load_json(path));
    const Dfa closed = local_closure(a);
    store_json(output, dfa_to_json(closed));
    if (json) {
        Json rep = Json::object();
        rep["command"] = "closure";
        rep["states"] = closed.state_count();
        rep["stats"] = stats_json(closed.state_count(), ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        inputs["output"] = output;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << "closure written to " << output << " (" << closed.state_count()
            << " states)\n";
    }
    return 0;
}

int run_extract_spec(const std::string& path, bool json, std::ostream& out) {
    const auto start = Clock::now();
    const Nfa a = nfa_from_json(load_json(path));
    const Json doc = spec_to_json(extract_local_spec(a));
    if (json) {
        Json rep = Json::object();
        rep["command"] = "extract-spec";
        rep["spec"] = doc;
        rep["stats"] = stats_json(0, ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int run_oracle_cartesian(const std::string& path, std::size_t max_len, bool json,
                         std::ostream& out) {
    const auto start = Clock::now();
    const Nfa a = nfa_from_json(load_json(path));
    const std::optional<CartesianWitness> witness = cartesian_oracle(a, max_len);
    const bool verdict = !witness.has_value();
    if (json) {
        Json rep = Json::object();
        rep["command"] = "oracle-cartesian";
        rep["verdict"] = verdict;
        if (witness) rep["witness"] = cartesian_to_json(*witness);
        rep["stats"] = stats_json(0, ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        inputs["max_len"] = max_len;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else if (witness) {
        out << "exchange violation (pivot: " << witness->pivot.token
            << ", alpha: " << to_string(witness->alpha)
            << ", beta: " << to_string(witness->beta)
            << ", gamma: " << to_string(witness->gamma)
            << ", delta: " << to_string(witness->delta) << ")\n";
    } else {
        out << "no exchange violation up to length " << max_len << '\n';
    }
    return verdict ? 0 : 1;
}

int run_enum(const std::string& path, std::size_t max_len, bool json,
             std::ostream& out) {
    const auto start = Clock::now();
    const Nfa a = nfa_from_json(load_json(path));
    const std::vector<Word> words = enumerate(a, max_len);
    if (json) {
        Json rep = Json::object();
        rep["command"] = "enum";
        Json listed = Json::array();
        for (const Word& w : words) listed.push_back(word_to_json(w));
        rep["words"] = std::move(listed);
        rep["stats"] = stats_json(words.size(), ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        inputs["max_len"] = max_len;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        for (const Word& w : words) out << to_string(w) << '\n';
    }
    return 0;
}

int run_regex_compile(const std::string& expr, const std::string& alphabet_csv,
                      bool marked, const std::string& output, bool json,
                      std::ostream& out) {
    const auto start = Clock::now();
    std::vector<Symbol> symbols;
    std::stringstream csv(alphabet_csv);
    for (std::string piece; std::getline(csv, piece, ',');) {
        if (piece.empty()) {
            throw InputError("--alphabet entries must be nonempty");
        }
        symbols.emplace_back(std::move(piece));
    }
    if (symbols.empty()) {
        throw InputError("--alphabet must list at least one symbol");
    }
    const RegexAst ast = parse_regex(expr, Alphabet(std::move(symbols)));
    const Nfa compiled = marked ? marked_automaton(ast) : glushkov(ast);
    store_json(output, nfa_to_json(compiled));
    if (json) {
        Json rep = Json::object();
        rep["command"] = "regex-compile";
        rep["states"] = compiled.state_count();
        rep["stats"] = stats_json(compiled.state_count(), ms_since(start));
        Json inputs = Json::object();
        inputs["expr"] = expr;
        inputs["alphabet"] = alphabet_csv;
        inputs["marked"] = marked;
        inputs["output"] = output;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << "automaton written to " << output << " (" << compiled.state_count()
            << " states)\n";
    }
    return 0;
}

int run_export_dot(const std::string& path, bool json, std::ostream& out) {
    const auto start = Clock::now();
    const Nfa a = nfa_from_json(load_json(path));
    const std::string dot = to_dot(a);
    if (json) {
        Json rep = Json::object();
        rep["command"] = "export-dot";
        rep["dot"] = dot;
        rep["stats"] = stats_json(0, ms_since(start));
        Json inputs = Json::object();
        inputs["file"] = path;
        rep["inputs"] = inputs;
        out << rep.dump() << '\n';
    } else {
        out << dot;
    }
    return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"decide locality of regular languages; build and check the "
                 "universality-to-locality gadget"};
    app.name("locus");
    app.require_subcommand(1);

    int code = 0;
    bool json = false;
    bool dfa_mode = false;
    bool marked = false;
    std::string file_a, file_b, output, expr, alphabet_csv, corpus;
    std::string engine = "antichain";
    std::size_t max_len = 0;
    unsigned jobs = 1;

    CLI::App* check_local =
        app.add_subcommand("check-local", "is the language of the automaton local?");
    check_local->add_option("file", file_a, "automaton JSON file")->required();
    check_local->add_flag("--dfa", dfa_mode,
                          "read a DFA file and take the polynomial route");
    check_local->callback(
        [&] { code = run_check_local(file_a, dfa_mode, json, out); });

    CLI::App* check_universal = app.add_subcommand(
        "check-universal", "does the automaton accept every word?");
    check_universal->add_option("file", file_a, "automaton JSON file")->required();
    check_universal->callback([&] { code = run_check_universal(file_a, json, out); });

    CLI::App* check_inclusion = app.add_subcommand(
        "check-inclusion", "is the first language included in the second?");
    check_inclusion->add_option("b", file_b, "candidate subset automaton")->required();
    check_inclusion->add_option("a", file_a, "candidate superset automaton")
        ->required();
    check_inclusion->add_option("--engine", engine, "antichain or oracle")
        ->check(CLI::IsMember({"antichain", "oracle"}));
    check_inclusion->callback(
        [&] { code = run_check_inclusion(file_b, file_a, engine, json, out); });

    CLI::App* check_infix = app.add_subcommand(
        "check-infix-free", "does no accepted word sit strictly inside another?");
    check_infix->add_option("file", file_a, "automaton JSON file")->required();
    check_infix->callback([&] { code = run_check_infix_free(file_a, json, out); });

    CLI::App* verify = app.add_subcommand(
        "verify-reduction",
        "universality of the seed against locality of its gadget");
    verify->add_option("file", file_a, "seed automaton JSON file");
    verify->add_option("--corpus", corpus, "directory of seed JSON files");
    verify->add_option("--jobs", jobs, "corpus worker threads")
        ->check(CLI::PositiveNumber);
    verify->callback([&] {
        if (!corpus.empty() && !file_a.empty()) {
            throw InputError("pass either a seed file or --corpus, not both");
        }
        if (corpus.empty() && file_a.empty()) {
            throw InputError("verify-reduction needs a seed file or --corpus");
        }
        code = corpus.empty() ? run_verify_reduction(file_a, json, out)
                              : run_corpus(corpus, jobs, json, out);
    });

    CLI::App* gadget = app.add_subcommand(
        "gadget", "wrap a seed automaton into the hard locality instance");
    gadget->add_option("file", file_a, "seed automaton JSON file")->required();
    gadget->add_option("-o,--output", output, "output JSON file")->required();
    gadget->callback([&] { code = run_gadget(file_a, output, json, out); });

    CLI::App* closure = app.add_subcommand(
        "closure", "smallest local language containing the input language");
    closure->add_option("file", file_a, "automaton JSON file")->required();
    closure->add_option("-o,--output", output, "output JSON file")->required();
    closure->callback([&] { code = run_closure(file_a, output, json, out); });

    CLI::App* extract = app.add_subcommand(
        "extract-spec", "first letters, last letters, and two-letter windows");
    extract->add_option("file", file_a, "automaton JSON file")->required();
    extract->callback([&] { code = run_extract_spec(file_a, json, out); });

    CLI::App* oracle = app.add_subcommand(
        "oracle-cartesian", "brute-force exchange-property scan up to a bound");
    oracle->add_option("file", file_a, "automaton JSON file")->required();
    oracle->add_option("--max-len", max_len, "word length bound")->required();
    oracle->callback(
        [&] { code = run_oracle_cartesian(file_a, max_len, json, out); });

    CLI::App* enumerate_cmd = app.add_subcommand(
        "enum", "accepted words in length-then-lexicographic order");
    enumerate_cmd->add_option("file", file_a, "automaton JSON file")->required();
    enumerate_cmd->add_option("--max-len", max_len, "word length bound")->required();
    enumerate_cmd->callback([&] { code = run_enum(file_a, max_len, json, out); });

    CLI::App* compile = app.add_subcommand(
        "regex-compile", "compile an expression to its position automaton");
    compile->add_option("expr", expr, "regular expression")->required();
    compile->add_option("--alphabet", alphabet_csv, "comma-separated symbol tokens")
        ->required();
    compile->add_flag("--marked", marked, "decorate each literal occurrence");
    compile->add_option("-o,--output", output, "output JSON file")->required();
    compile->callback(
        [&] { code = run_regex_compile(expr, alphabet_csv, marked, output, json, out); });

    CLI::App* export_dot = app.add_subcommand(
        "export-dot", "print the automaton in Graphviz format");
    export_dot->add_option("file", file_a, "automaton JSON file")->required();
    export_dot->callback([&] { code = run_export_dot(file_a, json, out); });

    for (CLI::App* sub :
         {check_local, check_universal, check_inclusion, check_infix, verify, gadget,
          closure, extract, oracle, enumerate_cmd, compile, export_dot}) {
        sub->add_flag("--json", json, "emit a machine-readable report");
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    }
    return code;
}

}  // namespace locus
