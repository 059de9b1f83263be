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

#include "qotp/io.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace qotp {

namespace {

class LineReader {
   public:
    explicit LineReader(std::istream &in) : in_(in) {}

    /// Next line without its terminator; false at end of input.
    bool next(std::string &line) {
        if (!std::getline(in_, line)) return false;
        line_no_++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
    std::string require(const char *what) {
        std::string line;
        if (!next(line)) throw FormatError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
        return line;
    }
    void expect_end() {
        std::string line;
        while (next(line)) {
            if (!line.empty()) throw FormatError(line_no_, "unexpected trailing content");
        }
    }
    size_t line_no() const { return line_no_; }

   private:
    std::istream &in_;
    size_t line_no_ = 0;
};

std::vector<std::string> split_spaces(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

/// Parses "<magic> v1 key=value ..." and checks the key set exactly.
std::map<std::string, std::string> parse_header(const std::string &line, size_t line_no, const std::string &magic,
                                                const std::vector<std::string> &keys) {
    auto toks = split_spaces(line);
    if (toks.size() < 2 || toks[0] != magic) throw FormatError(line_no, "expected '" + magic + "' header");
    if (toks[1] != "v1") throw FormatError(line_no, "unsupported " + magic + " version '" + toks[1] + "'");
    std::map<std::string, std::string> fields;
    for (size_t k = 2; k < toks.size(); k++) {
        auto eq = toks[k].find('=');
        if (eq == std::string::npos) throw FormatError(line_no, "malformed header field '" + toks[k] + "'");
        std::string key = toks[k].substr(0, eq);
        bool known = false;
        for (const auto &allowed : keys) known = known || allowed == key;
        if (!known) throw FormatError(line_no, "unknown header field '" + key + "'");
        if (!fields.emplace(key, toks[k].substr(eq + 1)).second) {
            throw FormatError(line_no, "duplicate header field '" + key + "'");
        }
    }
    for (const auto &key : keys) {
        if (!fields.count(key)) throw FormatError(line_no, "missing header field '" + key + "'");
    }
    return fields;
}

uint64_t parse_uint(const std::string &text, size_t line_no, const std::string &what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw FormatError(line_no, what + " must be a non-negative integer, got '" + text + "'");
    }
    errno = 0;
    unsigned long long v = std::strtoull(text.c_str(), nullptr, 10);
    if (errno == ERANGE) throw FormatError(line_no, what + " out of range");
    return v;
}

int parse_small(const std::string &text, size_t line_no, const std::string &what, int lo, int hi) {
    uint64_t v = parse_uint(text, line_no, what);
    if (v < uint64_t(lo) || v > uint64_t(hi)) {
        throw FormatError(line_no, what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return int(v);
}

double parse_double(const std::string &text, size_t line_no, const std::string &what) {
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0' || errno == ERANGE) {
        throw FormatError(line_no, "malformed " + what + " '" + text + "'");
    }
    return v;
}

BitString parse_bits(const std::string &text, size_t expected, size_t line_no) {
    if (text.size() != expected || text.find_first_not_of("01") != std::string::npos) {
        throw FormatError(line_no, "expected " + std::to_string(expected) + " characters of 0/1");
    }
    return BitString::from_string(text);
}

SchemeParams params_from_header(std::map<std::string, std::string> &f, size_t line_no) {
    int n = parse_small(f["n"], line_no, "n", 1, 64);
    int r = parse_small(f["r"], line_no, "r", 1, 64);
    int s = parse_small(f["s"], line_no, "s", 1, 128);
    if (r * s < 2 * n) throw FormatError(line_no, "r*s must be at least 2n");
    SchemeParams params = SchemeParams::make(r, s, 2 * n);
    GF2Poly declared;
    try {
        declared = GF2Poly::from_hex(f["modulus"]);
    } catch (const std::invalid_argument &e) {
        throw FormatError(line_no, e.what());
    }
    if (declared != params.modulus) {
        throw FormatError(line_no, "modulus " + f["modulus"] + " is not the derived degree-" + std::to_string(r) +
                                       " modulus " + params.modulus.hex());
    }
    return params;
}

std::string params_fields(const SchemeParams &p) {
    return "n=" + std::to_string(p.n()) + " r=" + std::to_string(p.r) + " s=" + std::to_string(p.s) +
           " modulus=" + p.modulus.hex();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_state(std::ostream &out, const StateVector &psi) {
    out << "qsv v1 n=" << psi.n() << "\n";
    for (const auto &a : psi.amps()) out << format_double(a.real()) << " " << format_double(a.imag()) << "\n";
}

StateVector read_state(std::istream &in) {
    LineReader reader(in);
    std::string header = reader.require("qsv header");
    auto f = parse_header(header, reader.line_no(), "qsv", {"n"});
    int n = parse_small(f["n"], reader.line_no(), "n", 1, 24);
    std::vector<Complex> amps(size_t{1} << n);
    for (auto &a : amps) {
        std::string line = reader.require("amplitude line");
        auto toks = split_spaces(line);
        if (toks.size() != 2) throw FormatError(reader.line_no(), "expected '<re> <im>'");
        a = {parse_double(toks[0], reader.line_no(), "real part"), parse_double(toks[1], reader.line_no(), "imaginary part")};
    }
    reader.expect_end();
    try {
        return StateVector(n, std::move(amps));
    } catch (const std::invalid_argument &e) {
        throw FormatError(reader.line_no(), e.what());
    }
}

void write_key(std::ostream &out, const KeyFile &key) {
    out << "qkey v1 " << params_fields(key.params) << " key=" << key.key.hex() << "\n";
}

KeyFile read_key(std::istream &in) {
    LineReader reader(in);
    std::string header = reader.require("qkey line");
    auto f = parse_header(header, reader.line_no(), "qkey", {"n", "r", "s", "modulus", "key"});
    KeyFile out{params_from_header(f, reader.line_no()), {}};
    try {
        out.key = BitString::from_hex(f["key"], size_t(out.params.key_bits()));
    } catch (const std::invalid_argument &e) {
        throw FormatError(reader.line_no(), e.what());
    }
    reader.expect_end();
    return out;
}

void write_set(std::ostream &out, const BiasedSet &set) {
    out << "aghp v1 " << params_fields(set.params) << "\n";
    for (size_t k = 0; k < set.size(); k++) out << set.member(k).str() << "\n";
}

BiasedSet read_set(std::istream &in) {
    LineReader reader(in);
    std::string header = reader.require("aghp header");
    auto f = parse_header(header, reader.line_no(), "aghp", {"n", "r", "s", "modulus"});
    SchemeParams params = params_from_header(f, reader.line_no());
    if (params.key_bits() > kMaxEnumeratedKeyBits || params.length > 64) {
        throw FormatError(reader.line_no(), "set too large to load");
    }
    BiasedSet set{params, {}};
    set.members.resize(size_t{1} << params.key_bits());
    for (auto &m : set.members) {
        std::string line = reader.require("set member");
        m = parse_bits(line, size_t(params.length), reader.line_no()).to_u64();
    }
    reader.expect_end();
    return set;
}

void write_pauli_scheme(std::ostream &out, const Scheme &scheme) {
    PauliDistribution unused = scheme.pauli_distribution();  // rejects Haar schemes
    (void)unused;
    out << "qscheme v1 kind=pauli n=" << scheme.n() << " m=" << scheme.m() << "\n";
    if (const auto *p = std::get_if<Scheme::ExplicitPauli>(&scheme.kind())) {
        for (const auto &k : p->keys) out << k.bits().str() << "\n";
        return;
    }
    BiasedSet set = build_set(std::get<Scheme::Aghp>(scheme.kind()).params);
    for (size_t k = 0; k < set.size(); k++) out << set.member(k).str() << "\n";
}

void write_haar_scheme_header(std::ostream &out, int n, uint64_t m, double epsilon, uint64_t seed) {
    out << "qscheme v1 kind=haar n=" << n << " m=" << m << " eps=" << format_double(epsilon) << " seed=" << seed << "\n";
}

Scheme read_scheme(std::istream &in) {
    LineReader reader(in);
    std::string header = reader.require("qscheme header");
    auto toks = split_spaces(header);
    bool haar = toks.size() >= 3 && toks[2] == "kind=haar";
    if (haar) {
        auto f = parse_header(header, reader.line_no(), "qscheme", {"kind", "n", "m", "eps", "seed"});
        int n = parse_small(f["n"], reader.line_no(), "n", 1, Scheme::kMaxHaarQubits);
        uint64_t m = parse_uint(f["m"], reader.line_no(), "m");
        double eps = parse_double(f["eps"], reader.line_no(), "eps");
        uint64_t seed = parse_uint(f["seed"], reader.line_no(), "seed");
        reader.expect_end();
        if (!(eps > 0.0) || eps > 2.0) throw FormatError(1, "eps must lie in (0, 2]");
        if (random_scheme_size(n, eps) != m) throw FormatError(1, "m does not match n and eps");
        return sample_random_scheme(n, eps, RandomSource::haar, seed);
    }
    auto f = parse_header(header, reader.line_no(), "qscheme", {"kind", "n", "m"});
    if (f["kind"] != "pauli") throw FormatError(reader.line_no(), "unknown scheme kind '" + f["kind"] + "'");
    int n = parse_small(f["n"], reader.line_no(), "n", 1, 32);
    uint64_t m = parse_uint(f["m"], reader.line_no(), "m");
    if (m == 0) throw FormatError(reader.line_no(), "m must be positive");
    std::vector<PauliKey> keys;
    for (uint64_t k = 0; k < m; k++) {
        std::string line = reader.require("Pauli line");
        keys.push_back(PauliKey::from_bits(parse_bits(line, size_t(2 * n), reader.line_no())));
    }
    reader.expect_end();
    return Scheme::explicit_pauli(n, std::move(keys));
}

nlohmann::ordered_json rational_json(const Rational &r) {
    return {{"exact", r.str()}, {"value", r.to_double()}};
}

nlohmann::ordered_json to_json(const AuditReport &report) {
    nlohmann::ordered_json j;
    j["epsilon_target"] = report.epsilon_target;
    j["max_distance"] = report.max_distance;
    j["mean_distance"] = report.mean_distance;
    j["trials"] = report.trials;
    j["distances"] = report.distances;
    j["pass"] = report.pass;
    return j;
}

nlohmann::ordered_json to_json(const StabilizerAuditReport &report) {
    nlohmann::ordered_json j;
    j["epsilon_target"] = report.epsilon_target;
    j["max_l1"] = rational_json(report.max_l1);
    j["stabilizers"] = report.checks.size();
    j["exhaustive_w"] = report.exhaustive_w;
    j["pass"] = report.pass;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &c : report.checks) {
        nlohmann::ordered_json row;
        row["family"] = c.family;
        row["label"] = c.label;
        row["rows"] = c.matrix.str();
        row["l1"] = rational_json(c.l1);
        row["pass"] = c.pass;
        rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    return j;
}

nlohmann::ordered_json to_json(const BiasReport &report) {
    nlohmann::ordered_json j;
    j["max_bias"] = rational_json(report.max_bias);
    j["argmax"] = report.argmax.str();
    j["mode"] = report.exhaustive ? "exhaustive" : "sampled";
    j["strings_tested"] = report.strings_tested;
    return j;
}

}  // namespace qotp
