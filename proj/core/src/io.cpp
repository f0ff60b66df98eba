// Copyright 2026 The gatesynth Authors
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

#include "gatesynth/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace gatesynth {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(std::string_view s) {
    s = trim(s);
    double x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
        throw ParseError("not a finite number: '" + std::string(s) + "'");
    }
    return x;
}

std::size_t parse_index(std::string_view s) {
    s = trim(s);
    std::size_t x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("not a non-negative integer: '" + std::string(s) + "'");
    }
    return x;
}

std::string complex_json(Complex z) { return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]"; }

Complex complex_from(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex entries must be [re, im] pairs");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("complex entry is not finite");
    }
    return {re, im};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Unitary2 unitary2_from(const json &j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != 2) {
        throw ParseError("Unitary2 JSON needs \"rows\" with two rows");
    }
    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
        const json &row = j["rows"][static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 2) {
            throw ParseError("Unitary2 rows must have two entries");
        }
        for (int c = 0; c < 2; ++c) {
            m(r, c) = complex_from(row[static_cast<std::size_t>(c)]);
        }
    }
    try {
        return Unitary2::from_matrix(m);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

std::string payload_text(const Unitary2 &u) {
    if (u == pauli_x()) return "X";
    if (u == pauli_y()) return "Y";
    if (u == pauli_z()) return "Z";
    const Matrix2 &m = u.matrix();
    const bool real = m(0, 0).imag() == 0 && m(0, 1).imag() == 0 && m(1, 0).imag() == 0 && m(1, 1).imag() == 0;
    const bool diagonal = m(0, 1) == Complex(0) && m(1, 0) == Complex(0);
    if (real && m(0, 0) == m(1, 1) && m(0, 1) == -m(1, 0)) {
        const std::string t = format_real(2 * std::atan2(m(0, 1).real(), m(0, 0).real()));
        if (make_ry(parse_real(t)) == u) return "RY(" + t + ")";
    }
    if (diagonal) {
        const std::string a = format_real(2 * std::arg(m(0, 0)));
        if (make_rz(parse_real(a)) == u) return "RZ(" + a + ")";
        const std::string d = format_real(std::arg(m(0, 0)));
        if (make_ph(parse_real(d)) == u) return "PH(" + d + ")";
    }
    return unitary2_to_json(u);
}

Unitary2 payload_from_text(std::string_view s) {
    s = trim(s);
    if (s == "X") return pauli_x();
    if (s == "Y") return pauli_y();
    if (s == "Z") return pauli_z();
    auto angle_of = [&](std::string_view prefix) -> std::optional<double> {
        if (s.size() > prefix.size() + 1 && s.substr(0, prefix.size()) == prefix && s.back() == ')') {
            return parse_real(s.substr(prefix.size(), s.size() - prefix.size() - 1));
        }
        return std::nullopt;
    };
    if (auto t = angle_of("RY(")) return make_ry(*t);
    if (auto a = angle_of("RZ(")) return make_rz(*a);
    if (auto d = angle_of("PH(")) return make_ph(*d);
    if (!s.empty() && s.front() == '{') return unitary2_from(parse_json(s));
    throw ParseError("unknown payload '" + std::string(s) + "'");
}

bool parse_bool(std::string_view s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("expected true or false, got '" + std::string(s) + "'");
}

}  // namespace

std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_wires() << "\n";
    for (const Ancilla &a : c.ancillas()) {
        out << "ancilla " << a.wire << " init=" << a.initial_value << " restored=" << (a.restored ? "true" : "false")
            << "\n";
    }
    for (const Gate &g : c.gates()) {
        out << "gate targets=" << g.target() << " controls=";
        if (g.controls().empty()) {
            out << "-";
        }
        for (std::size_t i = 0; i < g.controls().size(); ++i) {
            out << (i ? "," : "") << g.controls()[i];
        }
        out << " u=" << payload_text(g.payload()) << "\n";
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> c;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        try {
            const auto sp = line.find_first_of(" \t");
            const std::string_view head = line.substr(0, sp);
            std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
            if (head == "qubits") {
                if (c) fail(lineno, "duplicate qubits header");
                const std::size_t n = parse_index(rest);
                if (n == 0) fail(lineno, "qubits must be positive");
                c.emplace(n);
                continue;
            }
            if (!c) fail(lineno, "expected 'qubits <n>' before other lines");
            std::string_view payload;
            if (head == "gate") {
                const auto u = rest.find("u=");
                if (u == std::string_view::npos) fail(lineno, "gate line lacks u=");
                payload = rest.substr(u + 2);
                rest = trim(rest.substr(0, u));
            }
            std::vector<std::pair<std::string_view, std::string_view>> fields;
            std::string_view args = rest;
            std::string_view positional;
            while (!args.empty()) {
                const auto end = args.find_first_of(" \t");
                const std::string_view tok = args.substr(0, end);
                args = end == std::string_view::npos ? std::string_view{} : trim(args.substr(end));
                const auto eq = tok.find('=');
                if (eq == std::string_view::npos) {
                    if (!positional.empty()) fail(lineno, "unexpected token '" + std::string(tok) + "'");
                    positional = tok;
                } else {
                    fields.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
                }
            }
            auto field = [&](std::string_view key) -> std::string_view {
                for (const auto &[k, v] : fields) {
                    if (k == key) return v;
                }
                fail(lineno, "missing " + std::string(key) + "=");
            };
            for (const auto &[k, v] : fields) {
                const bool known = head == "gate" ? (k == "targets" || k == "controls")
                                                  : (k == "init" || k == "restored");
                if (!known) fail(lineno, "unknown field '" + std::string(k) + "'");
            }
            if (head == "ancilla") {
                if (positional.empty()) fail(lineno, "ancilla needs a wire index");
                Ancilla a;
                a.wire = static_cast<Wire>(parse_index(positional));
                a.initial_value = static_cast<int>(parse_index(field("init")));
                a.restored = parse_bool(field("restored"));
                c->add_ancilla(a);
            } else if (head == "gate") {
                if (!positional.empty()) fail(lineno, "unexpected token '" + std::string(positional) + "'");
                const Wire t = static_cast<Wire>(parse_index(field("targets")));
                std::vector<Wire> controls;
                std::string_view cs = field("controls");
                if (cs != "-") {
                    while (true) {
                        const auto comma = cs.find(',');
                        controls.push_back(static_cast<Wire>(parse_index(cs.substr(0, comma))));
                        if (comma == std::string_view::npos) break;
                        cs = cs.substr(comma + 1);
                    }
                }
                c->add(Gate(std::move(controls), t, payload_from_text(payload)));
            } else {
                fail(lineno, "unknown directive '" + std::string(head) + "'");
            }
        } catch (const ParseError &e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            fail(lineno, what);
        } catch (const std::exception &e) {
            fail(lineno, e.what());
        }
    }
    if (!c) {
        throw ParseError("missing 'qubits <n>' header");
    }
    return *std::move(c);
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

Circuit read_circuit_file(const std::filesystem::path &path) { return parse_circuit(read_text_file(path)); }

void write_circuit_file(const std::filesystem::path &path, const Circuit &c) {
    write_text_file(path, format_circuit(c));
}

std::string unitary2_to_json(const Unitary2 &u) {
    return "{\"rows\":[[" + complex_json(u(0, 0)) + "," + complex_json(u(0, 1)) + "],[" + complex_json(u(1, 0)) +
           "," + complex_json(u(1, 1)) + "]]}";
}

Unitary2 unitary2_from_json(std::string_view text) { return unitary2_from(parse_json(text)); }

std::string dense_to_json(const DenseUnitary &u) {
    const auto d = static_cast<std::size_t>(u.rows());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < d) ++n;
    std::string s = "{\"n\":" + std::to_string(n) + ",\"rows\":[";
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        s += r ? ",[" : "[";
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            s += (c ? "," : "") + complex_json(u(r, c));
        }
        s += "]";
    }
    return s + "]}";
}

DenseUnitary dense_from_json(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() || !j.contains("rows") ||
        !j["rows"].is_array()) {
        throw ParseError("DenseUnitary JSON needs unsigned \"n\" and \"rows\"");
    }
    const auto n = j["n"].get<std::size_t>();
    if (n > 16) {
        throw ParseError("DenseUnitary is limited to 16 wires");
    }
    const std::size_t d = std::size_t{1} << n;
    if (j["rows"].size() != d) {
        throw ParseError("DenseUnitary must have 2^n rows");
    }
    DenseUnitary m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
        const json &row = j["rows"][r];
        if (!row.is_array() || row.size() != d) {
            throw ParseError("DenseUnitary rows must have 2^n entries");
        }
        for (std::size_t c = 0; c < d; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from(row[c]);
        }
    }
    const auto dim = static_cast<Eigen::Index>(d);
    if (operator_distance(m * m.adjoint(), DenseUnitary::Identity(dim, dim)) > static_cast<double>(d) * kUnitaryTol) {
        throw ParseError("DenseUnitary is not unitary");
    }
    return m;
}

std::string report_to_json(const SynthesisReport &r) {
    nlohmann::ordered_json j;
    j["method"] = r.method;
    j["one_qubit"] = r.one_qubit;
    j["xor"] = r.xor_count;
    j["toffoli"] = r.toffoli;
    j["controlled_v"] = r.controlled_v;
    j["total_basic"] = r.total_basic;
    j["fully_basic"] = r.fully_basic();
    if (r.achieved_distance) {
        j["achieved_distance"] = *r.achieved_distance;
    } else {
        j["achieved_distance"] = nullptr;
    }
    return j.dump();
}

}  // namespace gatesynth
