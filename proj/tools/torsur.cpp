// torsur: homological bookkeeping for torus surgeries on 4-manifolds.
//
// Subcommands:
//   compute FILE   run the surgeries listed in an instance file
//   framing FILE   framing classification and the lambda invariant
//   kappa          Kodaira dimension classifier and lookup tables
//   catalog        list or export the built-in instances
//
// Exit codes: 0 success, 1 usage/parse error, 2 input-invariant violation,
// 3 theorem-consistency violation, 4 unrealizable Kodaira profile.

#include <torsur/catalog.hpp>
#include <torsur/instance.hpp>
#include <torsur/kodaira.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace torsur;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUnrealizable = 4;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::parse:
            return kExitParse;
        case ErrorKind::unrealizable_profile:
            return kExitUnrealizable;
        default:
            return kExitInvariant;
    }
}

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& text, const json& machine) const {
        std::ostringstream body;
        if (format == "json")
            body << machine.dump(2) << "\n";
        else
            body << text;
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(path);
            if (!out) throw Error(ErrorKind::parse, "cannot open output file " + path);
            out << body.str();
        }
    }
};

InstanceDocument load_instance(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::parse, "cannot open instance file " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

json fingerprint_json(const HomologyFingerprint& f) {
    return {{"b1", f.b1},
            {"b2", f.b2},
            {"b_plus", f.b_plus},
            {"euler", f.euler},
            {"signature", f.signature}};
}

std::optional<HomologyFingerprint> parse_fingerprint_csv(const std::string& csv) {
    HomologyFingerprint f;
    long long* slots[5] = {&f.b1, &f.b2, &f.b_plus, &f.euler, &f.signature};
    std::stringstream ss(csv);
    std::string tok;
    for (int i = 0; i < 5; ++i) {
        if (!std::getline(ss, tok, ',')) return std::nullopt;
        try {
            *slots[i] = std::stoll(tok);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (std::getline(ss, tok, ',')) return std::nullopt;
    return f;
}

// ---- compute -------------------------------------------------------------

int run_compute(const std::string& file, const std::vector<std::size_t>& selected,
                const std::string& assume_after, const Output& out) {
    InstanceDocument doc = load_instance(file);
    const ComplementPresentation& c = doc.complement;

    std::optional<HomologyFingerprint> assumed;
    if (!assume_after.empty()) {
        assumed = parse_fingerprint_csv(assume_after);
        if (!assumed)
            throw Error(ErrorKind::parse,
                        "--assume-after expects b1,b2,b+,chi,sigma");
    }

    std::vector<std::size_t> indices = selected;
    if (indices.empty())
        for (std::size_t i = 0; i < doc.surgeries.size(); ++i) indices.push_back(i);

    std::ostringstream text;
    json machine;
    machine["surgeries"] = json::array();
    bool any_violation = false;

    for (std::size_t idx : indices) {
        if (idx >= doc.surgeries.size())
            throw Error(ErrorKind::parse, "surgery index out of range");
        const NamedSurgery& ns = doc.surgeries[idx];
        const Framing& f = doc.framing(ns.framing);

        FgAbGroup h1 = surgered_h1(c, f, ns.spec);
        bool trivial = (ns.spec.p == 1 && ns.spec.k == 0);

        json entry;
        entry["index"] = idx;
        entry["framing"] = ns.framing;
        entry["p"] = int_to_json(ns.spec.p);
        entry["k"] = int_to_json(ns.spec.k);
        entry["h1"] = h1.to_string();
        text << "surgery #" << idx << " (framing " << ns.framing << ", p="
             << ns.spec.p << ", k=" << ns.spec.k << ", gamma=(" << ns.spec.gamma_a
             << "," << ns.spec.gamma_b << "))\n";
        text << "  H1 = " << h1.to_string() << (trivial ? "  (trivial surgery)" : "")
             << "\n";

        if (c.ambient()) {
            const AmbientData& amb = *c.ambient();
            BettiProfile profile = betti_profile_after(c, f, ns.spec);
            HomologyFingerprint before{derive_b1_of_X(c), amb.b2, amb.b_plus,
                                       amb.euler, amb.signature};
            HomologyFingerprint after = assumed ? *assumed : profile.after;

            Parity parity_before =
                amb.intersection_form_odd ? Parity::odd : Parity::even;
            Parity parity_after = parity_before;
            if (amb.l_class_status != LClassStatus::rationally_nonzero)
                parity_after = intersection_parity_after(c, f, ns.spec);

            entry["b1_delta"] = profile.b1_delta;
            entry["b2_delta"] = profile.b2_delta;
            entry["before"] = fingerprint_json(before);
            entry["after"] = fingerprint_json(after);
            entry["parity_after"] = to_string(parity_after);
            text << "  delta b1 = " << profile.b1_delta
                 << ", delta b2 = " << profile.b2_delta
                 << ", chi = " << profile.euler << ", sigma = " << profile.signature
                 << "\n";
            text << "  intersection form parity after: " << to_string(parity_after)
                 << "\n";

            ConsistencyReport report = check_surgery_consistency(
                amb.kappa, before, parity_before, after, parity_after, ns.spec.p);
            entry["consistency"] = report.passed ? "PASS" : "VIOLATION";
            entry["violations"] = report.violations;
            entry["warnings"] = report.warnings;
            text << "  consistency: " << (report.passed ? "PASS" : "VIOLATION")
                 << "\n";
            for (const std::string& v : report.violations)
                text << "    violation: " << v << "\n";
            for (const std::string& w : report.warnings)
                text << "    warning: " << w << "\n";
            if (!report.passed) any_violation = true;
        }
        machine["surgeries"].push_back(entry);
    }

    out.emit(text.str(), machine);
    return any_violation ? kExitViolation : 0;
}

// ---- framing -------------------------------------------------------------

int run_framing(const std::string& file, const std::string& framing_name,
                const std::string& preferred_name, const Output& out) {
    InstanceDocument doc = load_instance(file);
    const ComplementPresentation& c = doc.complement;
    const Framing& f = doc.framing(framing_name);

    std::ostringstream text;
    json machine;
    machine["framing"] = framing_name;

    // rational verdict: ker i1 over Q inside the framing subgroup over Q
    Lattice ker1 = ker_i1_rational(c);
    bool rational_preferred = true;
    for (const IntVec& v : ker1.basis())
        if (!f.subgroup().contains_rationally(v)) rational_preferred = false;
    machine["rational_topological_preferred"] = rational_preferred;
    text << "framing " << framing_name << "\n";
    text << "  rational topological preferred: "
         << (rational_preferred ? "YES" : "NO") << "\n";

    // integral verdict needs the user-supplied ker i2 generators
    if (c.ker_i2_integral()) {
        Lattice ker2z = Lattice::from_generators(3, *c.ker_i2_integral());
        bool preferred = ker2z.contains(longitudinal_class(f));
        machine["topological_preferred"] = preferred;
        text << "  topological preferred: " << (preferred ? "YES" : "NO") << "\n";
    } else {
        machine["topological_preferred"] = nullptr;
        text << "  topological preferred: unknown (ker_i2_integral not supplied)\n";
    }

    if (!preferred_name.empty()) {
        const Framing& pref = doc.framing(preferred_name);
        Int lambda = lambda_invariant(f, pref);
        machine["lambda"] = int_to_json(lambda);
        text << "  lambda = " << lambda << "\n";
    }

    out.emit(text.str(), machine);
    return 0;
}

// ---- kappa ---------------------------------------------------------------

int run_kappa(const std::string& k2, const std::string& kdotw, bool minimal,
              const std::string& cy_fingerprint, const std::string& almost_toric,
              const Output& out) {
    int modes = (!k2.empty() ? 1 : 0) + (!cy_fingerprint.empty() ? 1 : 0) +
                (!almost_toric.empty() ? 1 : 0);
    if (modes != 1)
        throw Error(ErrorKind::parse,
                    "pick exactly one of --k2/--kdotw, --cy-fingerprint, "
                    "--almost-toric");

    std::ostringstream text;
    json machine;

    if (!k2.empty()) {
        if (kdotw.empty())
            throw Error(ErrorKind::parse, "--k2 requires --kdotw");
        KodairaProfile profile;
        try {
            profile.k_squared = Int(k2);
            profile.k_dot_omega = Rational(kdotw);
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "--k2 expects an integer and --kdotw a rational like 3/2");
        }
        profile.minimal = minimal;
        Kappa kappa = classify_kappa(profile);
        machine["kappa"] = to_string(kappa);
        text << "kappa = " << to_string(kappa) << "\n";
    } else if (!cy_fingerprint.empty()) {
        auto f = parse_fingerprint_csv(cy_fingerprint);
        if (!f)
            throw Error(ErrorKind::parse,
                        "--cy-fingerprint expects b1,b2,b+,chi,sigma");
        CyLabel label = fingerprint_consistent(*f) ? cy_table_lookup(*f)
                                                   : CyLabel::no_match;
        machine["label"] = to_string(label);
        machine["consistent"] = fingerprint_consistent(*f);
        text << to_string(label) << "\n";
    } else {
        auto base = parse_almost_toric_base(almost_toric);
        if (!base)
            throw Error(ErrorKind::parse,
                        "unknown base '" + almost_toric +
                            "' (disk, cylinder, moebius, sphere, rp2, torus, klein)");
        AlmostToricFamilies fam = almost_toric_lookup(*base);
        machine["families"] = fam.families;
        machine["kappa"] = to_string(fam.kappa);
        for (const std::string& s : fam.families) text << s << "\n";
        text << "kappa = " << to_string(fam.kappa) << "\n";
    }

    out.emit(text.str(), machine);
    return 0;
}

// ---- catalog -------------------------------------------------------------

int run_catalog(const std::string& action, const std::string& name,
                const Output& out) {
    if (action == "list") {
        std::ostringstream text;
        json machine = json::array();
        for (const CatalogEntry& e : all_entries()) {
            text << e.name << "  -  " << e.description << "\n";
            machine.push_back({{"name", e.name}, {"description", e.description}});
        }
        out.emit(text.str(), machine);
        return 0;
    }
    if (action == "emit") {
        if (name.empty())
            throw Error(ErrorKind::parse, "catalog emit needs an entry name");
        json j = instance_to_json(entry_to_instance(find_entry(name)));
        out.emit(j.dump(2) + "\n", j);
        return 0;
    }
    throw Error(ErrorKind::parse, "catalog action must be 'list' or 'emit'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological effects of torus surgeries on 4-manifolds"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format/--output appear after the subcommand

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", out.path, "write the report to a file");

    auto* compute = app.add_subcommand("compute", "run surgeries from an instance file");
    std::string compute_file;
    std::vector<std::size_t> compute_selected;
    std::string assume_after;
    compute->add_option("file", compute_file, "instance file")->required();
    compute->add_option("--surgery", compute_selected,
                        "indices of surgeries to run (default: all)");
    compute->add_option("--assume-after", assume_after,
                        "externally claimed after-surgery fingerprint "
                        "b1,b2,b+,chi,sigma to verify instead of the computed one");

    auto* framing = app.add_subcommand("framing", "classify a framing");
    std::string framing_file, framing_name, preferred_name;
    framing->add_option("file", framing_file, "instance file")->required();
    framing->add_option("--framing", framing_name, "framing to classify")->required();
    framing->add_option("--preferred", preferred_name,
                        "preferred framing to compare against (lambda)");

    auto* kappa = app.add_subcommand("kappa", "Kodaira dimension tools");
    std::string k2, kdotw, cy_fingerprint, almost_toric;
    bool minimal = true;
    kappa->add_option("--k2", k2, "K^2");
    kappa->add_option("--kdotw", kdotw, "K.[omega] as a rational");
    kappa->add_option("--minimal", minimal, "profile is a minimal model");
    kappa->add_option("--cy-fingerprint", cy_fingerprint,
                      "b1,b2,b+,chi,sigma to match against the CY table");
    kappa->add_option("--almost-toric", almost_toric,
                      "base of an almost toric fibration");

    auto* catalog = app.add_subcommand("catalog", "built-in instances");
    std::string catalog_action, catalog_name;
    catalog->add_option("action", catalog_action, "list | emit")->required();
    catalog->add_option("name", catalog_name, "entry name for emit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (compute->parsed())
            return run_compute(compute_file, compute_selected, assume_after, out);
        if (framing->parsed())
            return run_framing(framing_file, framing_name, preferred_name, out);
        if (kappa->parsed())
            return run_kappa(k2, kdotw, minimal, cy_fingerprint, almost_toric, out);
        if (catalog->parsed())
            return run_catalog(catalog_action, catalog_name, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitParse;
}
