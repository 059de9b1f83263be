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

#ifndef QOTP_IO_H
#define QOTP_IO_H

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qotp/audit.h"
#include "qotp/bits.h"
#include "qotp/qstate.h"
#include "qotp/scheme.h"
#include "qotp/smallbias.h"

namespace qotp {

/// Malformed input; `line` is 1-based.
class FormatError : public std::runtime_error {
   public:
    FormatError(size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    size_t line() const { return line_; }

   private:
    size_t line_;
};

// State file:
//   qsv v1 n=<n>
//   <re> <im>          2^n lines, basis-index order, %.17g
void write_state(std::ostream &out, const StateVector &psi);
StateVector read_state(std::istream &in);

// Key file (one line):
//   qkey v1 n=<n> r=<r> s=<s> modulus=<hex> key=<hex of 2r bits>
struct KeyFile {
    SchemeParams params;
    BitString key;
};
void write_key(std::ostream &out, const KeyFile &key);
KeyFile read_key(std::istream &in);

// Small-bias set export:
//   aghp v1 n=<n> r=<r> s=<s> modulus=<hex>
//   <2n characters of 0/1>     2^(2r) lines in (x, y) lexicographic order
void write_set(std::ostream &out, const BiasedSet &set);
BiasedSet read_set(std::istream &in);

// Scheme file:
//   qscheme v1 kind=pauli n=<n> m=<m>         followed by m lines of 2n characters of 0/1
//   qscheme v1 kind=haar n=<n> m=<m> eps=<epsilon> seed=<seed>   regenerated from the seed
void write_pauli_scheme(std::ostream &out, const Scheme &scheme);
void write_haar_scheme_header(std::ostream &out, int n, uint64_t m, double epsilon, uint64_t seed);
Scheme read_scheme(std::istream &in);

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

nlohmann::ordered_json to_json(const AuditReport &report);
nlohmann::ordered_json to_json(const StabilizerAuditReport &report);
nlohmann::ordered_json to_json(const BiasReport &report);
nlohmann::ordered_json rational_json(const Rational &r);

}  // namespace qotp

#endif
