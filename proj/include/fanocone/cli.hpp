#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanocone/classify.hpp"
#include "fanocone/errors.hpp"
#include "fanocone/format.hpp"
#include "fanocone/hodge.hpp"
#include "fanocone/isotropic.hpp"
#include "fanocone/partition.hpp"
#include "fanocone/weyl.hpp"

namespace fanocone::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

namespace detail {

struct Args {
    std::string command;
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;  // --name value or --name=value
    Format format = Format::text;
};

inline bool option_takes_value(const std::string& name) {
    return name == "codim" || name == "ci" || name == "pair" || name == "theta" ||
           name == "table" || name == "format" || name == "kfano" || name == "cap";
}

inline Args parse_args(const std::vector<std::string>& argv) {
    Args args;
    std::vector<std::string> tokens = argv;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) == 0) {
            std::string name = tok.substr(2);
            std::string value;
            const auto eq = name.find('=');
            if (eq != std::string::npos) {
                value = name.substr(eq + 1);
                name = name.substr(0, eq);
                args.options[name] = value;
            } else if (option_takes_value(name)) {
                if (i + 1 >= tokens.size())
                    throw usage_error("option --" + name + " needs a value");
                args.options[name] = tokens[++i];
            } else {
                args.options[name] = "";
            }
        } else if (args.command.empty()) {
            args.command = tok;
        } else {
            args.positional.push_back(tok);
        }
        ++i;
    }
    auto it = args.options.find("format");
    if (it != args.options.end()) {
        if (it->second == "text") args.format = Format::text;
        else if (it->second == "json") args.format = Format::json;
        else if (it->second == "csv") args.format = Format::csv;
        else throw usage_error("unknown format '" + it->second + "'");
        args.options.erase(it);
    }
    return args;
}

inline void emit_json(std::ostream& out, const std::string& command, Json payload,
                      const std::vector<std::string>& citations) {
    Json env;
    env["schema"] = 1;
    env["command"] = command;
    env["payload"] = std::move(payload);
    env["citations"] = citations;
    out << env.dump(2) << "\n";
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    return quoted + "\"";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline GrassmannSpace require_grassmann(const AmbientSpace& space, const std::string& what) {
    if (space.kind() != AmbientSpace::Kind::grassmann)
        throw usage_error(what + " requires a Grassmann space G(r,s)");
    return space.grassmann_space();
}

inline std::string hyperplane_term(const Rat& coeff, int power) {
    const std::string h = power == 1 ? "H" : "H^" + std::to_string(power);
    if (coeff == 1) return h;
    if (coeff == -1) return "-" + h;
    return rat_str(coeff) + h;
}

// ---------------------------------------------------------------- betti ---

inline long long betti_of(const AmbientSpace& space, int k) {
    if (k < 0 || k > space.dim()) return 0;
    switch (space.kind()) {
        case AmbientSpace::Kind::grassmann:
            return count_partitions_in_box(k, space.grassmann_space().box());
        case AmbientSpace::Kind::orthogonal:
        case AmbientSpace::Kind::symplectic:
            return betti(space.isotropic_space(), k);
        case AmbientSpace::Kind::projective:
        case AmbientSpace::Kind::weighted_projective:
            return 1;
    }
    return 0;
}

inline std::vector<std::string> betti_citations(const AmbientSpace& space) {
    switch (space.kind()) {
        case AmbientSpace::Kind::grassmann:
            return {"Schubert basis: partitions in the r x (s-r) box"};
        case AmbientSpace::Kind::orthogonal:
        case AmbientSpace::Kind::symplectic:
            return {"Schubert (lambda,mu) basis (Ehresmann)"};
        default:
            return {"hyperplane-power basis of H^{2k}"};
    }
}

inline int run_betti(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1) throw usage_error("betti: want one space argument");
    const AmbientSpace space = parse_space(args.positional[0]);
    const bool all = args.options.count("all") > 0;
    const auto codim_it = args.options.find("codim");
    if (all == (codim_it != args.options.end()))
        throw usage_error("betti: pass exactly one of --codim k or --all");

    if (!all) {
        int k;
        try {
            k = std::stoi(codim_it->second);
        } catch (...) {
            throw usage_error("betti: bad --codim '" + codim_it->second + "'");
        }
        const long long value = betti_of(space, k);
        if (args.format == Format::json) {
            Json payload;
            payload["space"] = space.label();
            payload["codim"] = k;
            payload["betti"] = std::to_string(value);
            emit_json(out, "betti", payload, betti_citations(space));
        } else {
            out << value << "\n";
        }
        return 0;
    }
    if (args.format == Format::json) {
        Json census = Json::object();
        for (int k = 0; k <= space.dim(); ++k)
            census[std::to_string(k)] = std::to_string(betti_of(space, k));
        Json payload;
        payload["space"] = space.label();
        payload["dim"] = space.dim();
        payload["betti"] = std::move(census);
        emit_json(out, "betti", payload, betti_citations(space));
    } else if (args.format == Format::csv) {
        out << "codim,betti\n";
        for (int k = 0; k <= space.dim(); ++k) out << k << "," << betti_of(space, k) << "\n";
    } else {
        for (int k = 0; k <= space.dim(); ++k) out << k << " " << betti_of(space, k) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- product ---

inline int run_product(const Args& args, std::ostream& out) {
    if (args.positional.size() < 2)
        throw usage_error("product: want a space and at least one class");
    const GrassmannSpace g =
        require_grassmann(parse_space(args.positional[0]), "product");
    CohomologyClass acc = parse_class(g, args.positional[1]);
    for (std::size_t i = 2; i < args.positional.size(); ++i)
        acc = product(acc, parse_class(g, args.positional[i]));
    if (args.format == Format::json) {
        Json coeffs = Json::object();
        for (const auto& [p, c] : acc.coeffs()) coeffs[partition_token(p)] = rat_str(c);
        Json payload;
        payload["space"] = g.label();
        payload["codim"] = acc.codim();
        payload["result"] = std::move(coeffs);
        emit_json(out, "product", payload, {"Littlewood-Richardson rule"});
    } else {
        out << class_to_string(acc) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ intersect ---

inline int run_intersect(const Args& args, std::ostream& out) {
    if (args.positional.size() < 2)
        throw usage_error("intersect: want a space and at least one class");
    const GrassmannSpace g =
        require_grassmann(parse_space(args.positional[0]), "intersect");
    std::vector<CohomologyClass> factors;
    for (std::size_t i = 1; i < args.positional.size(); ++i)
        factors.push_back(parse_class(g, args.positional[i]));
    std::vector<int> ci;
    if (auto it = args.options.find("ci"); it != args.options.end()) {
        ci = parse_degree_list(it->second);
        for (int d : ci) {
            auto f = CohomologyClass::schubert(g, Partition{1});
            f *= Rat(d);
            factors.push_back(f);
        }
    }
    const Rat value = intersection_number(factors);
    if (args.format == Format::json) {
        Json payload;
        payload["space"] = g.label();
        payload["value"] = rat_str(value);
        if (!ci.empty()) {
            Json degrees = Json::array();
            for (int d : ci) degrees.push_back(d);
            payload["ci"] = std::move(degrees);
        }
        emit_json(out, "intersect", payload,
                  {"Littlewood-Richardson rule", "point class = full-box index"});
    } else {
        out << rat_str(value) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- chern ---

inline int default_chern_degree(const AmbientSpace& space) {
    switch (space.kind()) {
        case AmbientSpace::Kind::grassmann: return 2;
        case AmbientSpace::Kind::projective: return 3;
        case AmbientSpace::Kind::weighted_projective: return 2;
        default: return 1;
    }
}

inline int run_chern(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1)
        throw usage_error("chern: want one complete-intersection spec");
    const CIVariety x = parse_ci_spec(args.positional[0]);

    if (auto it = args.options.find("pair"); it != args.options.end()) {
        const GrassmannSpace g = require_grassmann(x.ambient, "chern --pair");
        const CohomologyClass surface = parse_class(g, it->second);
        const Rat value = pair_ch2_with_surface(x, surface);
        if (args.format == Format::json) {
            Json payload;
            payload["variety"] = x.label();
            payload["surface"] = class_to_string(surface);
            payload["value"] = rat_str(value);
            payload["not_weak_2_fano_certificate"] = sign_of(value) < 0;
            emit_json(out, "chern", payload,
                      {"ch_2(X) = ch_2(ambient) - sum d_i^2/2 sigma_1^2",
                       "pairing computed in the ambient space"});
        } else {
            out << rat_str(value) << "\n";
        }
        return 0;
    }

    if (auto it = args.options.find("kfano"); it != args.options.end()) {
        int k;
        try {
            k = std::stoi(it->second);
        } catch (...) {
            throw usage_error("chern: bad --kfano '" + it->second + "'");
        }
        std::string verdict;
        if (x.ambient.kind() == AmbientSpace::Kind::projective) {
            verdict = kfano_verdict_str(projective_weak_kfano_test(x.dim(), x.degrees, k));
        } else if (x.ambient.kind() == AmbientSpace::Kind::weighted_projective && k == 2) {
            const Rat c = weighted_ch2(x.ambient.weights(), x.degrees);
            verdict = sign_of(c) > 0    ? "positive"
                      : sign_of(c) == 0 ? "nef-not-positive"
                                        : "fails";
        } else {
            throw not_implemented_error("chern --kfano: supported for projective ambients "
                                        "(any k) and weighted ones (k = 2)");
        }
        if (args.format == Format::json) {
            Json payload;
            payload["variety"] = x.label();
            payload["k"] = k;
            payload["verdict"] = verdict;
            emit_json(out, "chern", payload,
                      {"ch_k nef iff sum d_i^k <= n+c+1 (projective)",
                       "weighted ch_2 = (sum w_i^2 - sum d_j^2)/2"});
        } else {
            out << verdict << "\n";
        }
        return 0;
    }

    const int up_to = default_chern_degree(x.ambient);
    const ChernVector ch = chern_character_ci(x, up_to);
    std::vector<std::string> lines;
    for (int s = 1; s <= up_to; ++s) {
        if (ch.uses_schubert)
            lines.push_back("ch" + std::to_string(s) + ": " +
                            class_to_string(ch.schubert[s - 1]));
        else
            lines.push_back("ch" + std::to_string(s) + ": " +
                            hyperplane_term(ch.hyperplane[s - 1], s));
    }
    if (args.format == Format::json) {
        Json payload;
        payload["variety"] = x.label();
        payload["dim"] = x.dim();
        payload["c1_coefficient"] = x.c1_coefficient();
        Json comps = Json::object();
        for (int s = 1; s <= up_to; ++s) {
            if (ch.uses_schubert) {
                Json term = Json::object();
                for (const auto& [p, c] : ch.schubert[s - 1].coeffs())
                    term[partition_token(p)] = rat_str(c);
                comps["ch" + std::to_string(s)] = std::move(term);
            } else {
                comps["ch" + std::to_string(s)] = rat_str(ch.hyperplane[s - 1]);
            }
        }
        payload["chern_character"] = std::move(comps);
        emit_json(out, "chern", payload,
                  {"tangent bundle of G(r,s) = S^dual (x) Q",
                   "ch_s(X) = ch_s(ambient) - sum d_i^s/s! H^s"});
    } else {
        for (const auto& line : lines) out << line << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- classify ---

struct TableSpec {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;  // per row, "" when absent
};

inline TableSpec candidate_table(const std::vector<CandidateRecord>& recs, bool with_bounds) {
    TableSpec t;
    if (with_bounds)
        t.header = {"family", "type", "cited", "derived", "status"};
    else
        t.header = {"space", "type", "verdict", "evidence", "citations"};
    for (const auto& rec : recs) {
        std::vector<std::string> row;
        if (with_bounds) {
            row.push_back(rec.space);
            row.push_back(rec.degrees.empty() ? "-" : rec.degrees_str());
            row.push_back(rec.cited_bound ? "n>" + std::to_string(*rec.cited_bound) : "-");
            row.push_back(rec.derived_bound ? "n>" + std::to_string(*rec.derived_bound) : "-");
            row.push_back(rec.cited_bound ? (rec.bound_discrepancy ? "DISCREPANCY" : "ok") : "-");
        } else {
            row.push_back(rec.space);
            row.push_back(rec.degrees_str());
            row.push_back(verdict_str(rec.verdict));
            row.push_back(rec.evidence ? rat_str(*rec.evidence) : "-");
            row.push_back(join(rec.citations, "; "));
        }
        t.rows.push_back(std::move(row));
        t.notes.push_back(rec.note);
    }
    return t;
}

inline void render_table_text(const TableSpec& t, std::ostream& out) {
    std::vector<std::size_t> widths(t.header.size(), 0);
    for (std::size_t c = 0; c + 1 < t.header.size(); ++c) widths[c] = t.header[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c + 1 < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    auto emit_row = [&](const std::vector<std::string>& row, const std::string& note) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line.append(widths[c] + 2 - row[c].size(), ' ');
        }
        if (!note.empty()) line += "  -- " + note;
        out << line << "\n";
    };
    emit_row(t.header, "");
    for (std::size_t i = 0; i < t.rows.size(); ++i) emit_row(t.rows[i], t.notes[i]);
}

inline void render_table_csv(const TableSpec& t, std::ostream& out) {
    std::vector<std::string> header = t.header;
    header.push_back("note");
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) out << ",";
        out << csv_field(header[c]);
    }
    out << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t c = 0; c < t.rows[i].size(); ++c) {
            if (c) out << ",";
            out << csv_field(t.rows[i][c]);
        }
        out << "," << csv_field(t.notes[i]) << "\n";
    }
}

inline Json record_json(const CandidateRecord& rec) {
    Json j;
    j["space"] = rec.space;
    j["type"] = rec.degrees_str();
    j["verdict"] = verdict_str(rec.verdict);
    if (rec.evidence) j["evidence"] = rat_str(*rec.evidence);
    if (rec.derived_bound) j["derived_bound"] = "n>" + std::to_string(*rec.derived_bound);
    if (rec.cited_bound) j["cited_bound"] = "n>" + std::to_string(*rec.cited_bound);
    if (rec.cited_bound) j["bound_discrepancy"] = rec.bound_discrepancy;
    if (!rec.note.empty()) j["note"] = rec.note;
    j["citations"] = rec.citations;
    return j;
}

inline int run_classify(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1)
        throw usage_error("classify: want one of grassmann|og|sg|high-index");
    const std::string& which = args.positional[0];
    int cap = 50;
    if (auto it = args.options.find("cap"); it != args.options.end()) {
        try {
            cap = std::stoi(it->second);
        } catch (...) {
            throw usage_error("classify: bad --cap '" + it->second + "'");
        }
    }

    std::vector<CandidateRecord> recs;
    std::vector<CandidateRecord> extra;  // rendered after the main table
    bool with_bounds = false;
    if (which == "grassmann") {
        recs = enumerate_grassmann_4folds(cap);
    } else if (which == "og") {
        recs = enumerate_og_4folds(cap);
        // the 2r = s branch is printed as its own block below the table
        while (!recs.empty() && recs.back().space.find("OG+(4,8)") != std::string::npos) {
            extra.insert(extra.begin(), recs.back());
            recs.pop_back();
        }
    } else if (which == "sg") {
        recs = enumerate_sg_4folds(cap);
    } else if (which == "high-index") {
        recs = high_index_catalog_check();
        with_bounds = true;
    } else {
        throw usage_error("classify: unknown table '" + which + "'");
    }

    if (args.format == Format::json) {
        Json rows = Json::array();
        for (const auto& rec : recs) rows.push_back(record_json(rec));
        Json payload;
        payload["table"] = which;
        payload["rows"] = std::move(rows);
        if (!extra.empty()) {
            Json xs = Json::array();
            for (const auto& rec : extra) xs.push_back(record_json(rec));
            payload["half_spinor"] = std::move(xs);
        }
        emit_json(out, "classify", payload,
                  {"finite constraint sweep: dimension and Fano-index bounds"});
    } else if (args.format == Format::csv) {
        auto t = candidate_table(recs, with_bounds);
        for (const auto& rec : extra) {
            auto x = candidate_table({rec}, with_bounds);
            t.rows.push_back(x.rows[0]);
            t.notes.push_back(x.notes[0]);
        }
        render_table_csv(t, out);
    } else {
        render_table_text(candidate_table(recs, with_bounds), out);
        if (!extra.empty()) {
            out << "\nhalf-spinor (2r = s):\n";
            render_table_text(candidate_table(extra, with_bounds), out);
        }
    }
    return 0;
}

// ----------------------------------------------------------------- weyl ---

inline int run_weyl(const Args& args, std::ostream& out) {
    if (args.positional.size() != 3)
        throw usage_error("weyl: want <type> <rank> <poincare|dim|duality-check>");
    const std::string& type_str = args.positional[0];
    CoxType type;
    if (type_str == "A") type = CoxType::A;
    else if (type_str == "B") type = CoxType::B;
    else if (type_str == "C") type = CoxType::C;
    else if (type_str == "D") type = CoxType::D;
    else if (type_str == "G2") type = CoxType::G2;
    else throw usage_error("weyl: unknown type '" + type_str + "'");
    int rank;
    try {
        rank = std::stoi(args.positional[1]);
    } catch (...) {
        throw usage_error("weyl: bad rank '" + args.positional[1] + "'");
    }

    auto theta_it = args.options.find("theta");
    if (theta_it == args.options.end())
        throw usage_error("weyl: --theta <nodes|none> is required (1-based kept nodes)");
    std::vector<int> theta;
    if (theta_it->second != "none") {
        for (int node : parse_degree_list(theta_it->second)) {
            if (node < 1 || node > rank)
                throw usage_error("weyl: theta node " + std::to_string(node) + " out of range");
            theta.push_back(node - 1);
        }
    }

    ParabolicQuotient q(CoxeterSystem(type, rank), theta);
    const std::string& action = args.positional[2];
    const std::vector<std::string> citations{"minimal coset representatives of W^Theta",
                                             "length = positive roots sent negative"};

    if (action == "dim") {
        if (args.format == Format::json) {
            Json payload;
            payload["system"] = q.system().label();
            payload["dim"] = q.dim();
            emit_json(out, "weyl", payload, citations);
        } else {
            out << q.dim() << "\n";
        }
        return 0;
    }
    if (action == "poincare") {
        const auto census = q.minimal_coset_reps();
        if (args.format == Format::json) {
            Json c = Json::object();
            for (const auto& [len, count] : census)
                c[std::to_string(len)] = std::to_string(count);
            Json payload;
            payload["system"] = q.system().label();
            payload["dim"] = q.dim();
            payload["census"] = std::move(c);
            emit_json(out, "weyl", payload, citations);
        } else if (args.format == Format::csv) {
            out << "length,count\n";
            for (const auto& [len, count] : census) out << len << "," << count << "\n";
        } else {
            for (const auto& [len, count] : census) out << len << " " << count << "\n";
        }
        return 0;
    }
    if (action == "duality-check") {
        bool ok = true;
        for (const auto& w : q.minimal_coset_rep_elements())
            if (!q.duality_check(w).second) ok = false;
        if (args.format == Format::json) {
            Json payload;
            payload["system"] = q.system().label();
            payload["all_dual"] = ok;
            emit_json(out, "weyl", payload, citations);
        } else {
            out << (ok ? "true" : "false") << "\n";
        }
        return ok ? 0 : 3;
    }
    throw usage_error("weyl: unknown action '" + action + "'");
}

// ---------------------------------------------------------------- hodge ---

inline int run_hodge(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1 || args.positional[0] != "b4-x11")
        throw usage_error("hodge: the one supported computation is 'b4-x11'");
    ChiTable table;
    std::string source = "builtin";
    auto load_file = [&](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw usage_error("hodge: cannot open chi table '" + path + "'");
        table = ChiTable::load(in);
        source = path;
    };
    if (auto it = args.options.find("table"); it != args.options.end()) {
        load_file(it->second);
    } else if (const char* env = std::getenv("FANOCONE_CHI_TABLE"); env && *env) {
        load_file(env);
    } else {
        table = ChiTable::builtin_default();
    }
    const LedgerResult result = evaluate_b4_x11(table);
    if (args.format == Format::json) {
        Json payload;
        payload["variety"] = "G(2,5):(1,1)";
        payload["chi_table"] = source;
        payload["chi_omega1"] = std::to_string(result.chi_omega1);
        payload["chi_omega2"] = std::to_string(result.chi_omega2);
        payload["h13"] = std::to_string(result.h13);
        payload["h22"] = std::to_string(result.h22);
        payload["b4"] = std::to_string(result.b4);
        payload["trace"] = result.trace;
        emit_json(out, "hodge", payload,
                  {"Koszul resolution of O_X", "conormal sequence",
                   "wedge-square Euler characteristic expansion"});
    } else {
        out << "chi(Omega_X): " << result.chi_omega1 << "\n";
        out << "chi(Omega^2_X): " << result.chi_omega2 << "\n";
        out << "h13: " << result.h13 << "\n";
        out << "h22: " << result.h22 << "\n";
        out << "b4: " << result.b4 << "\n";
    }
    return 0;
}

inline const char* usage_text() {
    return "fanocone: exact Schubert calculus, Betti censuses and 2-Fano tests\n"
           "\n"
           "usage: fanocone <command> [args] [--format text|json|csv]\n"
           "\n"
           "commands:\n"
           "  betti <space> (--codim k | --all)        Betti numbers b_2k\n"
           "  product <space> <class>...               Schubert-class product\n"
           "  intersect <space> <class>... [--ci d,..] intersection number\n"
           "  chern <space>:(d,..) [--pair <class>] [--kfano k]\n"
           "                                           Chern characters and pairings\n"
           "  classify (grassmann|og|sg|high-index)    candidate tables\n"
           "  weyl <type> <rank> --theta <nodes|none> (poincare|dim|duality-check)\n"
           "  hodge b4-x11 [--table file]              Euler-characteristic ledger\n"
           "\n"
           "spaces: G(r,s), OG(r,s), OG+(r,s), SG(r,s), P(n), P(w0,w1,...); 1^k repeats\n"
           "classes: s31 = sigma_{3,1}, s[10,3], signed sums like -s2+2s11\n";
}

}  // namespace detail

/// Entry point shared by the binary and the tests.  Returns 0 on success,
/// 2 on usage errors, 3 on domain errors.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        detail::Args args = detail::parse_args(argv);
        if (args.command == "help" || args.options.count("help")) {
            out << detail::usage_text();
            return 0;
        }
        if (args.command.empty()) {
            err << detail::usage_text();
            return 2;
        }
        if (args.command == "betti") return detail::run_betti(args, out);
        if (args.command == "product") return detail::run_product(args, out);
        if (args.command == "intersect") return detail::run_intersect(args, out);
        if (args.command == "chern") return detail::run_chern(args, out);
        if (args.command == "classify") return detail::run_classify(args, out);
        if (args.command == "weyl") return detail::run_weyl(args, out);
        if (args.command == "hodge") return detail::run_hodge(args, out);
        throw usage_error("unknown command '" + args.command + "'");
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace fanocone::cli
