/*
 *  Copyright (C) 2026  the hmknf contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmknf/errors.hpp"
#include "hmknf/kb_format.hpp"
#include "hmknf/reduction.hpp"
#include "hmknf/solver.hpp"
#include "hmknf/unfounded.hpp"

namespace hmknf::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> sorted_names(const KnowledgeBase& kb, const AtomSet& set) {
    std::vector<std::string> names;
    names.reserve(set.count());
    for (AtomId a : set) names.push_back(kb.atoms().name(a));
    std::sort(names.begin(), names.end());
    return names;
}

json partition_json(const KnowledgeBase& kb, const Partition& p) {
    return json{{"true", sorted_names(kb, p.t())}, {"false", sorted_names(kb, p.f())}};
}

json stats_json(const SolveStats& stats) {
    return json{{"decisions", stats.decisions}, {"conflicts", stats.conflicts}, {"checks", stats.checks}};
}

void print_partition(std::ostream& out, const KnowledgeBase& kb, const Partition& p) {
    out << "true = {";
    bool first = true;
    for (const auto& n : sorted_names(kb, p.t())) {
        out << (first ? "" : ", ") << n;
        first = false;
    }
    out << "}  false = {";
    first = true;
    for (const auto& n : sorted_names(kb, p.f())) {
        out << (first ? "" : ", ") << n;
        first = false;
    }
    out << "}";
}

// Resolves --true/--false atom names against the program's K-atoms.
Partition partition_from_names(const KnowledgeBase& kb, const std::vector<std::string>& trues,
                               const std::vector<std::string>& falses) {
    AtomSet t(kb.universe());
    AtomSet f(kb.universe());
    auto resolve = [&](const std::string& name, AtomSet& into) {
        auto id = kb.atoms().find(name);
        if (!id || !kb.ka().contains(*id))
            throw std::runtime_error("atom '" + name + "' is not a K-atom of the program");
        into.insert(*id);
    };
    for (const auto& n : trues) resolve(n, t);
    for (const auto& n : falses) resolve(n, f);
    return make_partition(kb, t, f); // throws on overlap
}

// Canonical model order for output: by sorted true-side names, then false.
void sort_models(const KnowledgeBase& kb, std::vector<Partition>& models) {
    std::sort(models.begin(), models.end(), [&](const Partition& a, const Partition& b) {
        auto ka = sorted_names(kb, a.t());
        auto kb_names = sorted_names(kb, b.t());
        if (ka != kb_names) return ka < kb_names;
        return sorted_names(kb, a.f()) < sorted_names(kb, b.f());
    });
}

struct SolveOptions {
    std::string file;
    bool all = false;
    bool brute = false;
    bool as_json = false;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
    KnowledgeBase kb = kb_from_text(read_file(opt.file));
    SolveOutcome outcome;
    if (opt.brute) {
        std::vector<Partition> models = brute_force_models(kb);
        outcome.found = !models.empty();
        outcome.stats.checks = std::uint64_t(1) << kb.ka().count();
        if (opt.all)
            outcome.models = std::move(models);
        else if (!models.empty())
            outcome.models.push_back(models.front());
    } else {
        outcome = solve(kb, Partition(AtomSet(kb.universe()), AtomSet(kb.universe())), opt.all);
    }
    sort_models(kb, outcome.models);
    if (opt.as_json) {
        json j{{"status", outcome.found ? "model" : "no_model"}};
        json models = json::array();
        for (const Partition& m : outcome.models) models.push_back(partition_json(kb, m));
        j["models"] = std::move(models);
        j["stats"] = stats_json(outcome.stats);
        out << j.dump() << "\n";
    } else {
        out << "status: " << (outcome.found ? "model" : "no_model") << "\n";
        for (std::size_t i = 0; i < outcome.models.size(); ++i) {
            out << "model " << (i + 1) << ": ";
            print_partition(out, kb, outcome.models[i]);
            out << "\n";
        }
        out << "stats: decisions=" << outcome.stats.decisions << " conflicts=" << outcome.stats.conflicts
            << " checks=" << outcome.stats.checks << "\n";
    }
    return outcome.found ? 0 : 1;
}

struct PartitionOptions {
    std::string file;
    std::vector<std::string> trues;
    std::vector<std::string> falses;
    bool as_json = false;
};

int cmd_propagate(const PartitionOptions& opt, std::ostream& out) {
    KnowledgeBase kb = kb_from_text(read_file(opt.file));
    Partition p = partition_from_names(kb, opt.trues, opt.falses);
    PropagationResult result = propagate(kb, p);
    if (result.ok()) {
        if (opt.as_json) {
            json j{{"status", "model"}};
            j["models"] = json::array({partition_json(kb, result.partition())});
            out << j.dump() << "\n";
        } else {
            out << "status: model\nfixpoint: ";
            print_partition(out, kb, result.partition());
            out << "\n";
        }
        return 0;
    }
    const PropagationConflict& conflict = result.conflict();
    const char* kind = conflict.kind == PropagationConflict::Kind::Overlap ? "overlap" : "dependability";
    if (opt.as_json) {
        json j{{"status", "conflict"}};
        j["conflict"] = json{{"kind", kind}, {"atoms", sorted_names(kb, conflict.atoms)}};
        out << j.dump() << "\n";
    } else {
        out << "status: conflict\nkind: " << kind << "\natoms: {";
        bool first = true;
        for (const auto& n : sorted_names(kb, conflict.atoms)) {
            out << (first ? "" : ", ") << n;
            first = false;
        }
        out << "}\n";
    }
    return 1;
}

struct UnfoundedOptions : PartitionOptions {
    bool exact = false;
};

int cmd_unfounded(const UnfoundedOptions& opt, std::ostream& out) {
    KnowledgeBase kb = kb_from_text(read_file(opt.file));
    Partition p = partition_from_names(kb, opt.trues, opt.falses);
    UnfoundedReport report = opt.exact ? greatest_unfounded_set(kb, p) : unfounded_approx(kb, p);
    if (opt.as_json) {
        json j{{"status", "unfounded_set"}};
        j["set"] = sorted_names(kb, report.set);
        j["exact"] = report.exact;
        j["dependable"] = report.partition_dependable;
        out << j.dump() << "\n";
    } else {
        out << "status: unfounded_set\nset: {";
        bool first = true;
        for (const auto& n : sorted_names(kb, report.set)) {
            out << (first ? "" : ", ") << n;
            first = false;
        }
        out << "}\nexact: " << (report.exact ? "yes" : "no")
            << "\ndependable: " << (report.partition_dependable ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_check(const PartitionOptions& opt, std::ostream& out) {
    KnowledgeBase kb = kb_from_text(read_file(opt.file));
    Partition p = partition_from_names(kb, opt.trues, opt.falses);
    bool result = check_model(kb, p); // throws std::invalid_argument when not total
    if (opt.as_json) {
        json j{{"status", "check"}, {"result", result}};
        out << j.dump() << "\n";
    } else {
        out << "status: check\nresult: " << (result ? "true" : "false") << "\n";
    }
    return result ? 0 : 1;
}

struct EncodeOptions {
    std::string file;
    bool disjunctive = false;
};

int cmd_encode(const EncodeOptions& opt, std::ostream& out) {
    CnfInstance cnf = parse_dimacs(read_file(opt.file));
    KnowledgeBase kb = opt.disjunctive ? encode_3sat_disjunctive(cnf) : encode_3sat_normal(cnf);
    out << serialize_kb(kb);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"unfounded sets, well-founded propagation, and MKNF models for ground "
                 "disjunctive hybrid MKNF knowledge bases over propositional ontologies"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "search for MKNF models");
    solve_cmd->add_option("file", solve_opt.file, "knowledge base file")->required();
    solve_cmd->add_flag("--all", solve_opt.all, "enumerate all models");
    solve_cmd->add_flag("--brute-force", solve_opt.brute, "use total-partition enumeration instead of search");
    solve_cmd->add_flag("--json", solve_opt.as_json, "JSON output");

    PartitionOptions prop_opt;
    auto* prop_cmd = app.add_subcommand("propagate", "run well-founded propagation to a fixpoint");
    prop_cmd->add_option("file", prop_opt.file, "knowledge base file")->required();
    prop_cmd->add_option("--true", prop_opt.trues, "atoms assumed true")->delimiter(',');
    prop_cmd->add_option("--false", prop_opt.falses, "atoms assumed false")->delimiter(',');
    prop_cmd->add_flag("--json", prop_opt.as_json, "JSON output");

    UnfoundedOptions unf_opt;
    auto* unf_cmd = app.add_subcommand("unfounded", "compute an unfounded set for a partition");
    unf_cmd->add_option("file", unf_opt.file, "knowledge base file")->required();
    unf_cmd->add_option("--true", unf_opt.trues, "atoms assumed true")->delimiter(',');
    unf_cmd->add_option("--false", unf_opt.falses, "atoms assumed false")->delimiter(',');
    unf_cmd->add_flag("--exact", unf_opt.exact, "greatest unfounded set (exponential) instead of the approximation");
    unf_cmd->add_flag("--json", unf_opt.as_json, "JSON output");

    PartitionOptions check_opt;
    auto* check_cmd = app.add_subcommand("check", "test whether a total partition induces an MKNF model");
    check_cmd->add_option("file", check_opt.file, "knowledge base file")->required();
    check_cmd->add_option("--true", check_opt.trues, "atoms assigned true")->delimiter(',');
    check_cmd->add_option("--false", check_opt.falses, "atoms assigned false")->delimiter(',');
    check_cmd->add_flag("--json", check_opt.as_json, "JSON output");

    EncodeOptions enc_opt;
    auto* enc_cmd = app.add_subcommand("encode-3sat", "translate a DIMACS CNF into a knowledge base");
    enc_cmd->add_option("file", enc_opt.file, "DIMACS CNF file")->required();
    enc_cmd->add_flag("--disjunctive", enc_opt.disjunctive, "disjunctive encoding (default: normal rules)");

    std::vector<const char*> argv;
    argv.push_back("hmknf");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_opt, out);
        if (prop_cmd->parsed()) return cmd_propagate(prop_opt, out);
        if (unf_cmd->parsed()) return cmd_unfounded(unf_opt, out);
        if (check_cmd->parsed()) return cmd_check(check_opt, out);
        if (enc_cmd->parsed()) return cmd_encode(enc_opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable with require_subcommand(1)
}

} // namespace hmknf::cli
