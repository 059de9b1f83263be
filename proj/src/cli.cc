// Copyright 2026 The qotp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qotp/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "qotp/audit.h"
#include "qotp/io.h"
#include "qotp/random.h"
#include "qotp/scheme.h"
#include "qotp/smallbias.h"

namespace qotp {

namespace {

constexpr const char *kFormatHelp = R"(File formats:
  key      qkey v1 n=<n> r=<r> s=<s> modulus=<hex> key=<hex of 2r bits>
           key bits: first r are x, last r are y; modulus is the smallest
           irreducible polynomial of degree r (hex of its coefficient bits)
  state    qsv v1 n=<n>, then 2^n lines '<re> <im>' in basis-index order;
           qubit 1 is the most significant bit of the index
  set      aghp v1 n=<n> r=<r> s=<s> modulus=<hex>, then 2^(2r) lines of 2n
           characters 0/1 in (x,y) order; bit (i,j) = <e_i x^j, y> at
           position j*r+i; a line is (a,b) for the Pauli X^a Z^b
  scheme   qscheme v1 kind=pauli n=<n> m=<m>, then m lines of 2n characters,
           or qscheme v1 kind=haar n=<n> m=<m> eps=<eps> seed=<seed>
  report   JSON object (--report <path>, '-' for stdout)
Exit status: 0 success, 1 audit FAIL, 2 usage or I/O error.)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    int n = 0;
    std::string epsilon;
    uint64_t seed = 0;
    std::string key;
    std::string in;
    std::string out;
    uint64_t trials = 0;
    std::string mode = "exhaustive";
    std::string source;
    std::string report;
    std::string scheme;
};

struct Epsilon {
    double value;
    Rational exact;
};

Epsilon parse_epsilon(const std::string &text) {
    Epsilon e{0, Rational(0)};
    try {
        e.exact = Rational::parse_decimal(text);
    } catch (const std::exception &) {
        throw UsageError("--epsilon must be a decimal number, got '" + text + "'");
    }
    e.value = e.exact.to_double();
    if (e.exact <= Rational(0) || e.exact > Rational(2)) throw UsageError("--epsilon must lie in (0, 2]");
    return e;
}

template <typename T, typename Fn>
T read_file(const std::string &path, Fn reader) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
    try {
        return reader(in);
    } catch (const FormatError &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

/// Writes `text` to `path`, or to `fallback` when path is empty or "-".
void emit(const std::string &path, const std::string &text, std::ostream &fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::ios_base::failure("failed writing '" + path + "'");
}

void emit_report(const Flags &flags, const nlohmann::ordered_json &j, std::ostream &out) {
    if (!flags.report.empty()) emit(flags.report, j.dump(2) + "\n", out);
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// Resolves the scheme an audit runs on: --scheme file, else built from --source.
Scheme resolve_scheme(const Flags &flags, const Epsilon &eps, int &n, std::string &label) {
    if (!flags.scheme.empty()) {
        Scheme s = read_file<Scheme>(flags.scheme, [](std::istream &in) { return read_scheme(in); });
        if (n != 0 && n != s.n()) throw UsageError("--n disagrees with the scheme file");
        n = s.n();
        label = "file";
        return s;
    }
    if (n == 0) throw UsageError("--n is required without --scheme");
    std::string source = flags.source.empty() ? "aghp" : flags.source;
    label = source;
    if (source == "aghp") return Scheme::aghp(choose_params(n, eps.value));
    uint64_t scheme_seed = Rng(flags.seed).split(0x5eed).seed();
    if (source == "pauli") return sample_random_scheme(n, eps.value, RandomSource::pauli_uniform, scheme_seed);
    if (source == "haar") return sample_random_scheme(n, eps.value, RandomSource::haar, scheme_seed);
    throw UsageError("--source must be aghp, pauli or haar");
}

void check_source(const std::string &source, std::initializer_list<const char *> allowed) {
    if (source.empty()) return;
    for (const char *a : allowed) {
        if (source == a) return;
    }
    std::string list;
    for (const char *a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw UsageError("--source must be one of " + list);
}

int cmd_keygen(const Flags &f, std::ostream &out) {
    Epsilon eps = parse_epsilon(f.epsilon);
    SchemeParams params = choose_params(f.n, eps.value);
    std::ostringstream text;
    write_key(text, {params, keygen(params, f.seed)});
    emit(f.out, text.str(), out);
    return kExitOk;
}

int cmd_crypt(const Flags &f, std::ostream &out, bool forward) {
    KeyFile key = read_file<KeyFile>(f.key, [](std::istream &in) { return read_key(in); });
    StateVector psi = read_file<StateVector>(f.in, [](std::istream &in) { return read_state(in); });
    if (psi.n() != key.params.n()) {
        throw UsageError("state has " + std::to_string(psi.n()) + " qubits but the key is for " + std::to_string(key.params.n()));
    }
    StateVector result = forward ? encrypt(psi, key.key, key.params) : decrypt(psi, key.key, key.params);
    std::ostringstream text;
    write_state(text, result);
    emit(f.out, text.str(), out);
    return kExitOk;
}

int cmd_build_set(const Flags &f, std::ostream &out) {
    Epsilon eps = parse_epsilon(f.epsilon);
    SchemeParams params = choose_params(f.n, eps.value);
    BiasedSet set = build_set(params);
    std::ostringstream text;
    write_set(text, set);
    emit(f.out, text.str(), out);
    return kExitOk;
}

int cmd_audit_bias(const Flags &f, std::ostream &out) {
    Epsilon eps = parse_epsilon(f.epsilon);
    if (f.mode != "exhaustive" && f.mode != "sampled") throw UsageError("--mode must be exhaustive or sampled");
    check_source(f.source, {"aghp", "pauli"});
    int n = f.n;
    std::string label;
    Scheme scheme = resolve_scheme(f, eps, n, label);
    PauliDistribution p = scheme.pauli_distribution();
    BiasMode mode = f.mode == "exhaustive" ? BiasMode::exhaustive() : BiasMode::sampled(f.trials ? f.trials : 1000, f.seed);
    BiasReport bias = bias_audit(p, mode);
    // Sufficient condition: 2^(n/2) * bias <= epsilon, compared exactly as 2^n * bias^2 <= epsilon^2.
    Rational lhs = Rational(int64_t{1} << n) * bias.max_bias * bias.max_bias;
    bool certified = lhs <= eps.exact * eps.exact;
    bool necessary = bias.max_bias <= eps.exact;
    nlohmann::ordered_json j;
    j["command"] = "audit-bias";
    j["scheme"] = label;
    j["n"] = n;
    j["m"] = scheme.m();
    j["epsilon_target"] = eps.value;
    j["bias"] = to_json(bias);
    j["certified_epsilon"] = std::sqrt(lhs.to_double());
    j["certified"] = certified && bias.exhaustive;
    j["necessary_condition"] = necessary;
    j["pass"] = certified;
    emit_report(f, j, out);
    out << "audit-bias: " << verdict(certified) << " n=" << n << " max_bias=" << bias.max_bias.str()
        << " certified_epsilon=" << format_double(std::sqrt(lhs.to_double())) << " epsilon=" << f.epsilon
        << " mode=" << f.mode << "\n";
    return certified ? kExitOk : kExitAuditFail;
}

int cmd_audit_randomize(const Flags &f, std::ostream &out) {
    Epsilon eps = parse_epsilon(f.epsilon);
    check_source(f.source, {"aghp", "pauli", "haar"});
    int n = f.n;
    std::string label;
    Scheme scheme = resolve_scheme(f, eps, n, label);
    uint64_t trials = f.trials ? f.trials : 200;
    AuditReport report = audit_epsilon_empirical(scheme, trials, f.seed, eps.value);
    nlohmann::ordered_json j;
    j["command"] = "audit-randomize";
    j["scheme"] = label;
    j["n"] = n;
    j["m"] = scheme.m();
    j["expected_distance_bound"] = expected_distance_bound(n, scheme.m());
    j["rank_bound_floor"] = rank_bound_floor(scheme.m(), n);
    j.update(to_json(report));
    emit_report(f, j, out);
    out << "audit-randomize: " << verdict(report.pass) << " n=" << n << " m=" << scheme.m()
        << " max_distance=" << format_double(report.max_distance) << " mean_distance=" << format_double(report.mean_distance)
        << " trials=" << trials << " epsilon=" << f.epsilon << "\n";
    return report.pass ? kExitOk : kExitAuditFail;
}

int cmd_audit_stabilizer(const Flags &f, std::ostream &out) {
    Epsilon eps = parse_epsilon(f.epsilon);
    if (f.mode != "exhaustive" && f.mode != "sampled") throw UsageError("--mode must be exhaustive or sampled");
    check_source(f.source, {"aghp", "pauli"});
    int n = f.n;
    std::string label;
    Scheme scheme = resolve_scheme(f, eps, n, label);
    StabilizerAuditOptions options;
    options.random_matrices = f.trials ? f.trials : 100;
    options.seed = f.seed;
    options.exhaustive_w = f.mode == "exhaustive";
    options.sampled_w = options.random_matrices;
    StabilizerAuditReport report = audit_stabilizers(scheme.pauli_distribution(), eps.value, options);
    nlohmann::ordered_json j;
    j["command"] = "audit-stabilizer";
    j["scheme"] = label;
    j["n"] = n;
    j["m"] = scheme.m();
    j.update(to_json(report));
    emit_report(f, j, out);
    out << "audit-stabilizer: " << verdict(report.pass) << " n=" << n << " stabilizers=" << report.checks.size()
        << " max_l1=" << report.max_l1.str() << " epsilon=" << f.epsilon << "\n";
    return report.pass ? kExitOk : kExitAuditFail;
}

int cmd_sample_scheme(const Flags &f, std::ostream &out) {
    Epsilon eps = parse_epsilon(f.epsilon);
    check_source(f.source, {"pauli", "haar"});
    std::ostringstream text;
    if (f.source == "haar") {
        if (f.n < 1 || f.n > Scheme::kMaxHaarQubits) throw UsageError("--source haar needs 1 <= n <= 6");
        write_haar_scheme_header(text, f.n, random_scheme_size(f.n, eps.value), eps.value, f.seed);
    } else {
        write_pauli_scheme(text, sample_random_scheme(f.n, eps.value, RandomSource::pauli_uniform, f.seed));
    }
    emit(f.out, text.str(), out);
    return kExitOk;
}

int cmd_state_gen(const Flags &f, std::ostream &out) {
    std::ostringstream text;
    write_state(text, random_pure_state(f.n, f.seed));
    emit(f.out, text.str(), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Approximate quantum one-time pad: Pauli encryption from small-bias sets, with audits", "qotp"};
    app.footer(kFormatHelp);
    app.require_subcommand(1, 1);
    Flags f;

    auto add_n = [&](CLI::App *c, bool required) {
        auto *o = c->add_option("--n", f.n, "Qubit count")->check(CLI::Range(1, 64));
        if (required) o->required();
    };
    auto add_eps = [&](CLI::App *c) { c->add_option("--epsilon", f.epsilon, "Target trace distance in (0, 2]")->required(); };
    auto add_seed = [&](CLI::App *c) { c->add_option("--seed", f.seed, "Seed for all randomness (default 0)"); };
    auto add_out = [&](CLI::App *c) { c->add_option("--out", f.out, "Output file (default stdout)"); };
    auto add_report = [&](CLI::App *c) { c->add_option("--report", f.report, "Write a JSON report ('-' for stdout)"); };
    auto add_scheme = [&](CLI::App *c) { c->add_option("--scheme", f.scheme, "Audit the scheme in this file"); };

    std::map<std::string, std::function<int()>> handlers;

    auto *keygen_cmd = app.add_subcommand("keygen", "Generate a key and its scheme parameters");
    add_n(keygen_cmd, true);
    add_eps(keygen_cmd);
    add_seed(keygen_cmd);
    add_out(keygen_cmd);
    handlers["keygen"] = [&] { return cmd_keygen(f, out); };

    for (const char *name : {"encrypt", "decrypt"}) {
        auto *c = app.add_subcommand(name, std::string(name) + " a state file with a key file");
        c->add_option("--key", f.key, "Key file")->required();
        c->add_option("--in", f.in, "Input state (.qsv)")->required();
        add_out(c);
        bool forward = std::string(name) == "encrypt";
        handlers[name] = [&, forward] { return cmd_crypt(f, out, forward); };
    }

    auto *set_cmd = app.add_subcommand("build-set", "Export the small-bias set of Pauli descriptors");
    add_n(set_cmd, true);
    add_eps(set_cmd);
    add_out(set_cmd);
    handlers["build-set"] = [&] { return cmd_build_set(f, out); };

    auto *bias_cmd = app.add_subcommand("audit-bias", "Maximum bias of a scheme's key distribution");
    add_n(bias_cmd, false);
    add_eps(bias_cmd);
    add_seed(bias_cmd);
    bias_cmd->add_option("--mode", f.mode, "exhaustive|sampled");
    bias_cmd->add_option("--trials", f.trials, "Test strings drawn in sampled mode (default 1000)");
    bias_cmd->add_option("--source", f.source, "aghp|pauli (default aghp)");
    add_scheme(bias_cmd);
    add_report(bias_cmd);
    handlers["audit-bias"] = [&] { return cmd_audit_bias(f, out); };

    auto *rand_cmd = app.add_subcommand("audit-randomize", "Trace distance from I/d over random pure states");
    add_n(rand_cmd, false);
    add_eps(rand_cmd);
    add_seed(rand_cmd);
    rand_cmd->add_option("--trials", f.trials, "Random pure states (default 200)");
    rand_cmd->add_option("--source", f.source, "aghp|pauli|haar (default aghp)");
    add_scheme(rand_cmd);
    add_report(rand_cmd);
    handlers["audit-randomize"] = [&] { return cmd_audit_randomize(f, out); };

    auto *stab_cmd = app.add_subcommand("audit-stabilizer", "Stabilizer pushforward distance from uniform");
    add_n(stab_cmd, false);
    add_eps(stab_cmd);
    add_seed(stab_cmd);
    stab_cmd->add_option("--trials", f.trials, "Random stabilizer matrices (default 100)");
    stab_cmd->add_option("--mode", f.mode, "exhaustive|sampled choice of w-derived stabilizers");
    stab_cmd->add_option("--source", f.source, "aghp|pauli (default aghp)");
    add_scheme(stab_cmd);
    add_report(stab_cmd);
    handlers["audit-stabilizer"] = [&] { return cmd_audit_stabilizer(f, out); };

    auto *sample_cmd = app.add_subcommand("sample-scheme", "Sample a random randomizing scheme");
    add_n(sample_cmd, true);
    add_eps(sample_cmd);
    add_seed(sample_cmd);
    sample_cmd->add_option("--source", f.source, "pauli|haar (default pauli)");
    add_out(sample_cmd);
    handlers["sample-scheme"] = [&] { return cmd_sample_scheme(f, out); };

    auto *state_cmd = app.add_subcommand("state-gen", "Write a random pure state");
    add_n(state_cmd, true);
    add_seed(state_cmd);
    add_out(state_cmd);
    handlers["state-gen"] = [&] { return cmd_state_gen(f, out); };

    std::vector<std::string> argv_storage;
    argv_storage.push_back("qotp");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(name)();
    } catch (const FormatError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qotp
