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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gatesynth/gatesynth.hpp"

namespace gatesynth::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Circuits wider than this are reported without a simulated distance.
constexpr std::size_t kMeasureWires = 10;
constexpr double kDefaultTol = 1e-9;

enum class Mode { kExact, kGlobalPhase, kCongruent };

struct TargetArgs {
    std::string u_file;
    std::string named;
    std::optional<double> theta;
    std::string input_file;
};

struct Verdict {
    double distance = 0.0;
    bool ok = false;
    double leakage = 0.0;
    std::optional<double> phase;
    std::vector<int> signs;
};

[[noreturn]] void malformed(const std::string &msg) { throw ParseError(msg); }
[[noreturn]] void incompatible(const std::string &msg) { throw DomainError(msg); }

Mode parse_mode(const std::string &s) {
    if (s == "exact") return Mode::kExact;
    if (s == "global-phase") return Mode::kGlobalPhase;
    if (s == "congruent") return Mode::kCongruent;
    malformed("unknown mode '" + s + "'");
}

const char *mode_name(Mode m) {
    switch (m) {
        case Mode::kExact:
            return "exact";
        case Mode::kGlobalPhase:
            return "global-phase";
        case Mode::kCongruent:
            return "congruent";
    }
    return "exact";
}

/// Payload named by --u or --target, if any.
std::optional<Unitary2> payload_of(const TargetArgs &t) {
    if (!t.u_file.empty() && !t.named.empty()) {
        malformed("--u and --target are mutually exclusive");
    }
    if (!t.u_file.empty()) {
        return unitary2_from_json(read_text_file(t.u_file));
    }
    if (t.named.empty()) {
        return std::nullopt;
    }
    if (t.named == "toffoli" || t.named == "toffoli-n") {
        return pauli_x();
    }
    if (t.named == "deutsch") {
        if (!t.theta) {
            malformed("target 'deutsch' needs --theta");
        }
        return Unitary2::from_matrix(Complex(0, 1) * make_rx(*t.theta).matrix());
    }
    malformed("unknown target '" + t.named + "'");
}

bool is_not_gate(const Unitary2 &u) { return u.distance(pauli_x()) <= kUnitaryTol; }

/// Compares circuit action (restricted to the ancilla block, if any) with
/// `target` on the logical wires.
Verdict evaluate(const Circuit &c, const DenseUnitary &target, Mode mode, double tol) {
    if (c.num_wires() > kMaxSimWires) {
        throw std::length_error("circuit is too wide to simulate");
    }
    DenseUnitary actual = simulate(c);
    Verdict v;
    if (!c.ancillas().empty()) {
        AncillaBlock blk = ancilla_block(c, actual);
        actual = std::move(blk.block);
        v.leakage = blk.leakage;
    }
    if (actual.rows() != target.rows()) {
        incompatible("target acts on " + std::to_string(target.rows()) + " states, circuit on " +
                     std::to_string(actual.rows()));
    }
    switch (mode) {
        case Mode::kExact:
            v.distance = operator_distance(actual, target);
            break;
        case Mode::kGlobalPhase: {
            const Complex overlap = (target.adjoint() * actual).trace();
            double phi = std::abs(overlap) == 0.0 ? 0.0 : std::arg(overlap);
            if (phi <= -std::numbers::pi) phi = std::numbers::pi;
            v.phase = phi;
            v.distance = operator_distance(actual, target * std::polar(1.0, phi));
            break;
        }
        case Mode::kCongruent: {
            DenseUnitary flipped = target;
            v.signs.assign(static_cast<std::size_t>(target.cols()), 1);
            for (Eigen::Index j = 0; j < target.cols(); ++j) {
                if (target.col(j).dot(actual.col(j)).real() < 0) {
                    v.signs[static_cast<std::size_t>(j)] = -1;
                    flipped.col(j) = -flipped.col(j);
                }
            }
            v.distance = operator_distance(actual, flipped);
            break;
        }
    }
    v.ok = v.distance <= tol && v.leakage <= tol;
    return v;
}

std::size_t logical_wires(const Circuit &c) { return c.num_wires() - c.ancillas().size(); }

/// Reference for `controls` controls on the first logical wires and the
/// target on the last one.
DenseUnitary controlled_reference(std::size_t wires, std::size_t controls, const Unitary2 &u) {
    if (controls + 1 > wires) {
        incompatible("target needs " + std::to_string(controls + 1) + " wires, circuit has " + std::to_string(wires));
    }
    std::vector<Wire> ctl;
    for (std::size_t i = 0; i < controls; ++i) ctl.push_back(static_cast<Wire>(i));
    return embed_gate(Gate(ctl, static_cast<Wire>(wires - 1), u), wires);
}

void emit_circuit(const Circuit &c, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << format_circuit(c);
    } else {
        write_circuit_file(out_path, c);
    }
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
    std::string method;
    TargetArgs target;
    std::optional<std::size_t> controls;
    std::optional<std::size_t> n;
    std::optional<double> eps;
    std::optional<std::size_t> crossover;
    std::string variant = "quarter";
    bool basic = false;
    bool no_merge = false;
    bool no_measure = false;
    std::string out;
};

struct Synthesized {
    Circuit circuit{1};
    DenseUnitary reference;
    Mode mode = Mode::kExact;
};

/// Resolves the wire count from --n and --controls, where a method with
/// `extra` non-control wires has n = controls + extra.
std::size_t wire_count(const SynthArgs &a, std::size_t extra) {
    if (a.n && a.controls && *a.n != *a.controls + extra) {
        incompatible("--n " + std::to_string(*a.n) + " conflicts with --controls " + std::to_string(*a.controls));
    }
    if (a.n) return *a.n;
    if (a.controls) return *a.controls + extra;
    malformed("method '" + a.method + "' needs --n or --controls");
}

Unitary2 require_payload(const SynthArgs &a) {
    auto u = payload_of(a.target);
    if (!u) malformed("method '" + a.method + "' needs --u or --target");
    return *u;
}

/// Methods that only build a NOT accept no payload other than X.
void require_not_payload(const SynthArgs &a) {
    if (a.target.named == "toffoli" && a.method != "congruent-toffoli") {
        incompatible("target 'toffoli' fixes two controls; use 'toffoli-n'");
    }
    if (auto u = payload_of(a.target); u && !is_not_gate(*u)) {
        incompatible("method '" + a.method + "' synthesizes only multi-controlled NOT");
    }
}

void require_fixed_controls(const SynthArgs &a, std::size_t k) {
    if (wire_count(a, 1) != k + 1) {
        incompatible("method '" + a.method + "' needs exactly " + std::to_string(k) + " control(s)");
    }
}

SynthArgs with_default_controls(SynthArgs a, std::size_t k) {
    if (!a.n && !a.controls) a.controls = k;
    return a;
}

Synthesized synthesize(const SynthArgs &args) {
    const std::string &m = args.method;
    const bool merge = !args.no_merge;
    QuadraticOptions qopts;
    qopts.merge = merge;
    if (args.crossover) qopts.crossover = *args.crossover;
    SynthArgs a = args;
    if (a.target.named == "toffoli") {
        if (a.controls && *a.controls != 2) incompatible("target 'toffoli' has two controls");
        if (!a.n) a.controls = 2;
    }
    if (a.target.named == "deutsch") {
        if (a.controls && *a.controls != 2) incompatible("target 'deutsch' has two controls");
        if (!a.n) a.controls = 2;
    }

    Synthesized s;
    if (m == "controlled-u" || m == "controlled-su2" || m == "controlled-phase" || m == "controlled-symmetric" ||
        m == "controlled-symmetric-not") {
        a = with_default_controls(a, 1);
        require_fixed_controls(a, 1);
        const Unitary2 u = require_payload(a);
        if (m == "controlled-u") {
            s.circuit = synth_c_u(u, merge);
        } else if (m == "controlled-su2") {
            if (std::abs(u.det() - Complex(1, 0)) > 1e-9) incompatible("payload determinant is not 1");
            s.circuit = synth_c_su2(u);
        } else if (m == "controlled-phase") {
            if (!is_scalar(u)) incompatible("payload is not a scalar phase");
            s.circuit = synth_c_phase(std::arg(u(0, 0)));
        } else if (m == "controlled-symmetric") {
            s.circuit = synth_c_ab(u);
        } else {
            s.circuit = synth_c_v(u);
        }
        s.reference = reference_controlled(1, u);
    } else if (m == "doubly-controlled") {
        a = with_default_controls(a, 2);
        require_fixed_controls(a, 2);
        const Unitary2 u = require_payload(a);
        s.circuit = args.basic ? expand_cc_u(u, merge) : synth_cc_u(u);
        s.reference = reference_controlled(2, u);
    } else if (m == "congruent-toffoli") {
        a = with_default_controls(a, 2);
        require_fixed_controls(a, 2);
        require_not_payload(a);
        CongruentVariant v;
        if (args.variant == "quarter") {
            v = CongruentVariant::kRyQuarter;
        } else if (args.variant == "three-quarter") {
            v = CongruentVariant::kRyThreeQuarter;
        } else {
            malformed("unknown variant '" + args.variant + "'");
        }
        s.circuit = synth_congruent_toffoli(v).circuit;
        s.reference = reference_controlled(2, pauli_x());
        s.mode = Mode::kCongruent;
    } else if (m == "graycode") {
        const std::size_t wires = wire_count(a, 1);
        const Unitary2 u = require_payload(a);
        s.circuit = synth_graycode(wires - 1, u, args.basic ? Level::kBasic : Level::kNative);
        s.reference = controlled_reference(wires, wires - 1, u);
    } else if (m == "mcx-ladder") {
        if (!a.n) malformed("method 'mcx-ladder' needs --n");
        require_not_payload(a);
        const std::size_t ctl = a.controls.value_or((*a.n + 1) / 2);
        s.circuit = synth_mcx_ladder(*a.n, ctl, args.basic ? Level::kBasic : Level::kNative);
        s.reference = controlled_reference(*a.n, ctl, pauli_x());
    } else if (m == "mcx-split") {
        const std::size_t wires = wire_count(a, 2);
        require_not_payload(a);
        s.circuit = args.basic ? expand_mcx_split(wires, merge) : synth_mcx_split(wires, Level::kNative);
        s.reference = wires <= kMeasureWires ? controlled_reference(wires, wires - 2, pauli_x()) : DenseUnitary();
    } else if (m == "quadratic" || m == "approx" || m == "su2-linear") {
        const std::size_t wires = wire_count(a, 1);
        const Unitary2 u = require_payload(a);
        if (m == "quadratic") {
            s.circuit = synth_mcu_quadratic(wires, u, qopts);
        } else if (m == "approx") {
            if (!args.eps) malformed("method 'approx' needs --eps");
            s.circuit = synth_mcu_approx(wires, u, *args.eps, qopts);
        } else {
            if (std::abs(u.det() - Complex(1, 0)) > 1e-9) incompatible("payload determinant is not 1");
            s.circuit = synth_mcsu2_linear(wires, u, merge);
        }
        if (wires <= kMeasureWires) s.reference = controlled_reference(wires, wires - 1, u);
    } else if (m == "ancilla") {
        const std::size_t wires = wire_count(a, 2);
        const Unitary2 u = require_payload(a);
        s.circuit = synth_mcu_ancilla(wires, u, merge);
        if (wires <= kMeasureWires) s.reference = controlled_reference(wires - 1, wires - 2, u);
    } else if (m == "general") {
        if (args.target.input_file.empty()) malformed("method 'general' needs --input");
        if (!args.target.u_file.empty() || !args.target.named.empty()) {
            incompatible("method 'general' takes a dense matrix via --input only");
        }
        const DenseUnitary u = dense_from_json(read_text_file(args.target.input_file));
        s.circuit = synth_unitary(u, qopts).circuit;
        s.reference = u;
    } else {
        malformed("unknown method '" + m + "'");
    }
    if (m != "general" && !args.target.input_file.empty()) {
        incompatible("--input is only used by method 'general'");
    }
    return s;
}

int cmd_synth(const SynthArgs &args, std::ostream &out) {
    Synthesized s = synthesize(args);
    SynthesisReport r = count_basic(s.circuit);
    r.method = args.method;
    if (!args.no_measure && s.reference.size() > 0 && s.circuit.num_wires() <= kMeasureWires) {
        r.achieved_distance = evaluate(s.circuit, s.reference, s.mode, kDefaultTol).distance;
    }
    emit_circuit(s.circuit, args.out, out);
    out << report_to_json(r) << '\n';
    return kOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
    std::string circuit;
    TargetArgs target;
    std::optional<std::size_t> controls;
    std::string mode = "exact";
    double tol = kDefaultTol;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    const Mode mode = parse_mode(a.mode);
    if (!(a.tol >= 0) || !std::isfinite(a.tol)) malformed("--tol must be a non-negative number");
    const Circuit c = read_circuit_file(a.circuit);
    const std::size_t wires = logical_wires(c);
    DenseUnitary target;
    if (!a.target.input_file.empty()) {
        if (!a.target.u_file.empty() || !a.target.named.empty()) {
            malformed("--input excludes --u and --target");
        }
        target = dense_from_json(read_text_file(a.target.input_file));
    } else {
        const auto u = payload_of(a.target);
        if (!u) malformed("verify needs --u, --target or --input");
        std::size_t k = a.controls.value_or(wires - 1);
        if ((a.target.named == "toffoli" || a.target.named == "deutsch") && !a.controls) k = 2;
        target = controlled_reference(wires, k, *u);
    }
    const Verdict v = evaluate(c, target, mode, a.tol);
    json j;
    j["mode"] = mode_name(mode);
    j["ok"] = v.ok;
    j["distance"] = v.distance;
    j["tol"] = a.tol;
    if (!c.ancillas().empty()) j["leakage"] = v.leakage;
    if (v.phase) j["phase"] = *v.phase;
    if (mode == Mode::kCongruent) j["signs"] = v.signs;
    out << j.dump() << '\n';
    return v.ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- count

struct CountArgs {
    std::string circuit;
    std::string expect;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
};

struct Expectation {
    std::string formula;
    bool ok = false;
};

std::size_t pow2(std::size_t k) { return std::size_t{1} << k; }

Expectation check_formula(const CountArgs &a, const Circuit &c, const SynthesisReport &r) {
    const std::string &e = a.expect;
    auto need = [&](const std::optional<std::size_t> &v, const char *flag) {
        if (!v) malformed("--expect " + e + " needs " + flag);
        return *v;
    };
    Expectation x;
    if (e == "controlled-u") {
        x.formula = "one_qubit <= 4, xor <= 2";
        x.ok = r.fully_basic() && r.one_qubit <= 4 && r.xor_count <= 2;
    } else if (e == "doubly-controlled") {
        if (r.fully_basic()) {
            x.formula = "one_qubit == 8, xor == 8";
            x.ok = r.one_qubit == 8 && r.xor_count == 8;
        } else {
            x.formula = "controlled_v == 3, xor == 2";
            x.ok = r.controlled_v == 3 && r.xor_count == 2 && r.one_qubit == 0;
        }
    } else if (e == "congruent-toffoli") {
        x.formula = "two-bit gates == 3";
        x.ok = count_two_bit_gates(c) == 3;
    } else if (e == "graycode") {
        const std::size_t m = a.m ? *a.m : need(a.n, "--n or --m") - 1;
        if (m < 2 || m > 30) incompatible("graycode needs 2 <= m <= 30");
        if (r.fully_basic()) {
            x.formula = "xor == 3*2^m-4, one_qubit == 2*2^m (m=" + std::to_string(m) + ")";
            x.ok = r.xor_count == 3 * pow2(m) - 4 && r.one_qubit == 2 * pow2(m);
        } else {
            x.formula = "controlled_v == 2^m-1, xor == 2^m-2 (m=" + std::to_string(m) + ")";
            x.ok = r.controlled_v == pow2(m) - 1 && r.xor_count == pow2(m) - 2 && r.toffoli == 0;
        }
    } else if (e == "mcx-ladder") {
        const std::size_t m = need(a.m, "--m");
        if (m < 3) incompatible("mcx-ladder needs m >= 3");
        x.formula = "toffoli == 4(m-2) (m=" + std::to_string(m) + ")";
        x.ok = r.toffoli == 4 * (m - 2) && r.controlled_v == 0 && r.one_qubit == 0 && r.xor_count == 0;
    } else if (e == "mcx-split") {
        const std::size_t n = need(a.n, "--n");
        if (n < 7) incompatible("mcx-split needs n >= 7");
        if (r.fully_basic()) {
            // Upper bound: the built network undercuts it for n >= 8.
            x.formula = "total_basic <= 48n-204 (n=" + std::to_string(n) + ")";
            x.ok = r.total_basic <= 48 * n - 204;
        } else {
            x.formula = "toffoli == 8(n-5) (n=" + std::to_string(n) + ")";
            x.ok = r.toffoli == 8 * (n - 5) && r.controlled_v == 0 && r.one_qubit == 0 && r.xor_count == 0;
        }
    } else {
        incompatible("no closed-form count for '" + e + "'");
    }
    return x;
}

int cmd_count(const CountArgs &a, std::ostream &out, std::ostream &err) {
    const Circuit c = read_circuit_file(a.circuit);
    SynthesisReport r = count_basic(c);
    out << report_to_json(r) << '\n';
    if (a.expect.empty()) return kOk;
    const Expectation x = check_formula(a, c, r);
    if (!x.ok) {
        err << "count mismatch: expected " << x.formula << '\n';
        return kCheckFailed;
    }
    err << "count matches " << x.formula << '\n';
    return kOk;
}

// ----------------------------------------------------------------- demo

struct DemoArgs {
    std::string out = "gatesynth-demo";
    double theta = std::numbers::pi / 3;
};

int cmd_demo(const DemoArgs &a, std::ostream &out) {
    const fs::path dir(a.out);
    fs::create_directories(dir / "targets");
    fs::create_directories(dir / "circuits");

    // Named targets, generated from their definitions.
    const Unitary2 deutsch = Unitary2::from_matrix(Complex(0, 1) * make_rx(a.theta).matrix());
    write_text_file(dir / "targets" / "toffoli.u.json", unitary2_to_json(pauli_x()) + "\n");
    write_text_file(dir / "targets" / "toffoli.dense.json", dense_to_json(reference_controlled(2, pauli_x())) + "\n");
    write_text_file(dir / "targets" / "toffoli-4.dense.json",
                    dense_to_json(reference_controlled(3, pauli_x())) + "\n");
    write_text_file(dir / "targets" / "deutsch.u.json", unitary2_to_json(deutsch) + "\n");
    write_text_file(dir / "targets" / "deutsch.dense.json", dense_to_json(reference_controlled(2, deutsch)) + "\n");
    json meta;
    meta["wire_order"] = "wire 0 is the most significant bit of the basis index";
    meta["deutsch_theta"] = a.theta;
    write_text_file(dir / "targets" / "README.json", meta.dump(2) + "\n");

    struct Item {
        std::string name;
        Circuit circuit;
    };
    const Unitary2 sample = EulerDecomposition{0.3, 1.1, 0.7, -0.4}.reconstruct();
    std::vector<Item> items;
    items.push_back({"controlled-u", synth_c_u(sample)});
    items.push_back({"doubly-controlled", synth_cc_u(pauli_x())});
    items.push_back({"toffoli-basic", expand_cc_u(pauli_x())});
    items.push_back({"congruent-quarter", synth_congruent_toffoli(CongruentVariant::kRyQuarter).circuit});
    items.push_back({"congruent-three-quarter", synth_congruent_toffoli(CongruentVariant::kRyThreeQuarter).circuit});
    items.push_back({"graycode-3", synth_graycode(3, sample)});
    items.push_back({"mcx-ladder-7", synth_mcx_ladder(7, 4)});
    items.push_back({"mcx-split-7", synth_mcx_split(7)});
    items.push_back({"mcx-split-7-basic", expand_mcx_split(7)});
    items.push_back({"ancilla-5", synth_mcu_ancilla(5, sample)});

    constexpr std::size_t kDrawLimit = 40;
    for (const Item &it : items) {
        const fs::path file = dir / "circuits" / (it.name + ".circ");
        write_circuit_file(file, it.circuit);
        SynthesisReport r = count_basic(it.circuit);
        r.method = it.name;
        out << "# " << it.name << "  -> " << file.string() << '\n';
        out << report_to_json(r) << '\n';
        if (it.circuit.size() <= kDrawLimit) {
            out << draw_circuit(it.circuit);
        } else {
            out << "(" << it.circuit.size() << " gates; diagram omitted)\n";
        }
        out << '\n';
    }
    return kOk;
}

char payload_glyph(const Gate &g) {
    const Unitary2 &u = g.payload();
    if (g.is_not_payload()) return 'X';
    if (u.distance(pauli_y()) <= kKindTol) return 'Y';
    if (u.distance(pauli_z()) <= kKindTol) return 'Z';
    return g.controls().empty() ? 'U' : 'V';
}

}  // namespace

std::string draw_circuit(const Circuit &c) {
    const std::size_t n = c.num_wires();
    std::vector<std::string> rows(n);
    std::vector<bool> is_anc(n, false);
    for (const Ancilla &a : c.ancillas()) is_anc[a.wire] = true;
    for (std::size_t w = 0; w < n; ++w) {
        std::string label = (is_anc[w] ? "a" : "q") + std::to_string(w);
        label.resize(4, ' ');
        rows[w] = label + "-";
    }
    for (const Gate &g : c.gates()) {
        const std::vector<Wire> ws = g.wires();
        const Wire lo = ws.front();
        const Wire hi = ws.back();
        for (std::size_t w = 0; w < n; ++w) {
            char mid = '-';
            if (w == g.target()) {
                mid = payload_glyph(g);
            } else if (std::find(g.controls().begin(), g.controls().end(), w) != g.controls().end()) {
                mid = '@';
            } else if (w > lo && w < hi) {
                mid = '|';
            }
            rows[w] += '-';
            rows[w] += mid;
            rows[w] += '-';
        }
    }
    std::string s;
    for (const std::string &r : rows) s += r + "-\n";
    return s;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum gate network synthesis and verification", "gatesynth"};
    app.require_subcommand(1);

    auto add_target = [](CLI::App *sub, TargetArgs &t) {
        sub->add_option("--u", t.u_file, "2x2 unitary payload (Unitary2 JSON file)");
        sub->add_option("--target", t.named, "named payload: toffoli, toffoli-n, deutsch");
        sub->add_option("--theta", t.theta, "angle for the deutsch target");
        sub->add_option("--input", t.input_file, "full unitary (DenseUnitary JSON file)");
    };

    SynthArgs sa;
    CLI::App *synth = app.add_subcommand("synth", "synthesize a circuit");
    synth->add_option("--method", sa.method, "construction to use")->required();
    add_target(synth, sa.target);
    synth->add_option("--controls", sa.controls, "number of controls");
    synth->add_option("--n", sa.n, "number of wires");
    synth->add_option("--eps", sa.eps, "approximation tolerance");
    synth->add_option("--crossover", sa.crossover, "wire count where recursion replaces the gray code");
    synth->add_option("--variant", sa.variant, "congruent Toffoli variant: quarter, three-quarter");
    synth->add_flag("--basic", sa.basic, "expand to one-qubit gates and XORs");
    synth->add_flag("--no-merge", sa.no_merge, "skip adjacent-gate merging");
    synth->add_flag("--no-measure", sa.no_measure, "skip the simulated distance in the report");
    synth->add_option("--out", sa.out, "circuit output file (default: standard output)");

    VerifyArgs va;
    CLI::App *verify = app.add_subcommand("verify", "check a circuit against a target");
    verify->add_option("circuit", va.circuit, "circuit file")->required();
    add_target(verify, va.target);
    verify->add_option("--controls", va.controls, "number of controls (default: all but the last wire)");
    verify->add_option("--mode", va.mode, "exact, global-phase or congruent");
    verify->add_option("--tol", va.tol, "tolerance on the operator distance");

    CountArgs ca;
    CLI::App *count = app.add_subcommand("count", "count the gates of a circuit");
    count->add_option("circuit", ca.circuit, "circuit file")->required();
    count->add_option("--expect", ca.expect, "compare with the closed-form count of a method");
    count->add_option("--n", ca.n, "number of wires for --expect");
    count->add_option("--m", ca.m, "number of controls for --expect");

    DemoArgs da;
    CLI::App *demo = app.add_subcommand("demo", "write fixtures and print diagrams");
    demo->add_option("--out", da.out, "output directory");
    demo->add_option("--theta", da.theta, "angle of the deutsch fixture");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    }

    try {
        if (*synth) return cmd_synth(sa, out);
        if (*verify) return cmd_verify(va, out);
        if (*count) return cmd_count(ca, out, err);
        if (*demo) return cmd_demo(da, out);
    } catch (const ParseError &e) {
        err << "malformed input: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const DomainError &e) {
        err << "incompatible: " << e.what() << '\n';
        return kIncompatible;
    } catch (const std::invalid_argument &e) {
        err << "incompatible: " << e.what() << '\n';
        return kIncompatible;
    } catch (const std::length_error &e) {
        err << "incompatible: " << e.what() << '\n';
        return kIncompatible;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    }
    return kMalformedInput;
}

}  // namespace gatesynth::cli
