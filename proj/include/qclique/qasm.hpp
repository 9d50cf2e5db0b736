#pragma once

// OpenQASM 2.0 emission and the matching reader.
//
// qelib1.inc stops at ccx, so multi-controlled Toffolis need lowering:
//
//   ccx-vchain  each MCT with c >= 3 controls becomes the clean-ancilla
//               V-chain of 2(c-2)+1 ccx gates over a separate work register
//               w[c-2], which is returned to |0>.
//   mcx-macro   one composite `gate mct<c>` per control count is declared up
//               front (ancilla-free: H on the target around a phase-polynomial
//               multi-controlled Z built from cx and u1) and then invoked.
//
// The reader accepts exactly the vocabulary the emitter produces.

#include <bit>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/error.hpp"

namespace qclique {

enum class McxPolicy { CcxVChain, McxMacro };

inline std::string_view to_string(McxPolicy p) noexcept {
  return p == McxPolicy::CcxVChain ? "ccx-vchain" : "mcx-macro";
}

inline std::optional<McxPolicy> mcx_policy_from_name(std::string_view name) noexcept {
  if (name == "ccx-vchain") return McxPolicy::CcxVChain;
  if (name == "mcx-macro") return McxPolicy::McxMacro;
  return std::nullopt;
}

/// Clean-ancilla V-chain for a Toffoli with controls.size() >= 3 controls.
/// Needs controls.size() - 2 work qubits, all |0> on entry and on exit.
inline std::vector<Gate> vchain_decompose(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> work) {
  const std::size_t c = controls.size();
  if (c < 3) return {Gate::controlled_x({controls.begin(), controls.end()}, target)};
  if (work.size() < c - 2)
    throw ArgumentError("V-chain over " + std::to_string(c) + " controls needs " + std::to_string(c - 2) +
                        " work qubits");
  std::vector<Gate> compute;
  compute.push_back(Gate::mct({controls[0], controls[1]}, work[0]));
  for (std::size_t i = 2; i + 1 < c; ++i) compute.push_back(Gate::mct({controls[i], work[i - 2]}, work[i - 1]));
  std::vector<Gate> out = compute;
  out.push_back(Gate::mct({controls[c - 1], work[c - 3]}, target));
  out.insert(out.end(), compute.rbegin(), compute.rend());
  return out;
}

inline std::string mct_macro_name(std::size_t controls) { return "mct" + std::to_string(controls); }

/// `gate mct<c> c0,...,t { ... }`. The body is H(t) . CZ_{c0..t} . H(t),
/// where the all-ones phase flip is the phase polynomial
///   pi * x0*x1*...*xq = pi/2^(q-1) * sum over nonempty S of (-1)^(|S|-1) * parity_S(x)
/// evaluated with one u1 per subset, walking subsets in Gray-code order.
inline std::string mct_macro_declaration(std::size_t controls) {
  const std::size_t q = controls + 1;
  std::vector<std::string> args;
  for (std::size_t i = 0; i < controls; ++i) args.push_back("c" + std::to_string(i));
  args.push_back("t");
  const std::string angle = "pi/" + std::to_string(std::uint64_t{1} << (q - 1));

  std::ostringstream out;
  out << "gate " << mct_macro_name(controls) << ' ';
  for (std::size_t i = 0; i < q; ++i) out << (i ? "," : "") << args[i];
  out << "\n{\n  h t;\n";
  auto phase = [&](std::uint64_t subset_bits, std::size_t top) {
    out << "  u1(" << (std::popcount(subset_bits) % 2 == 0 ? "" : "-") << angle << ") " << args[top] << ";\n";
  };
  for (std::size_t top = 0; top < q; ++top) {
    std::uint64_t prev = 0;
    const std::uint64_t count = std::uint64_t{1} << top;
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t gray = i ^ (i >> 1);
      if (i > 0) out << "  cx " << args[std::countr_zero(gray ^ prev)] << "," << args[top] << ";\n";
      phase(gray, top);
      prev = gray;
    }
    for (std::size_t j = 0; j < top; ++j)
      if ((prev >> j) & 1U) out << "  cx " << args[j] << "," << args[top] << ";\n";
  }
  out << "  h t;\n}\n";
  return out.str();
}

namespace detail {

inline std::string metadata_comment(const CircuitMetadata& md) {
  std::ostringstream out;
  out << "// qclique: n=" << md.n << " k=" << md.k << " graph=" << graph_hash_hex(md.graph_hash)
      << " iterations=" << md.iterations;
  if (md.solutions) out << " solutions=" << *md.solutions;
  out << " pruned=" << md.pruned_combinations << " pruned_gates=" << md.pruned_gates;
  return out.str();
}

}  // namespace detail

inline constexpr const char* kPrepareComment = "// output line starts in |1>";

/// Circuits are defined from init_state (O = |1>) while QASM registers start
/// at |0>, so the output follows the register declarations with one `x` on O.
inline std::string emit_qasm(const Circuit& c, McxPolicy policy = McxPolicy::CcxVChain) {
  const auto& layout = c.layout();
  const std::size_t semantic = layout.semantic_qubits();

  std::size_t max_controls = 0;
  std::map<std::size_t, bool> macro_arities;
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::MCT) continue;
    max_controls = std::max(max_controls, g.controls.size());
    if (g.controls.size() >= 3) macro_arities[g.controls.size()] = true;
  }
  std::size_t work = layout.work;
  if (policy == McxPolicy::CcxVChain && max_controls >= 3) work = std::max(work, max_controls - 2);

  auto name = [&](Qubit q) {
    return q < semantic ? "q[" + std::to_string(q) + "]" : "w[" + std::to_string(q - semantic) + "]";
  };

  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (c.metadata()) out << detail::metadata_comment(*c.metadata()) << '\n';
  if (policy == McxPolicy::McxMacro)
    for (const auto& [arity, _] : macro_arities) out << mct_macro_declaration(arity);
  if (semantic > 0) out << "qreg q[" << semantic << "];\n";
  if (work > 0) out << "qreg w[" << work << "];\n";
  if (layout.inputs > 0) out << "creg c[" << layout.inputs << "];\n";
  if (!layout.is_empty()) out << kPrepareComment << "\nx " << name(layout.output()) << ";\n";

  std::vector<Qubit> work_qubits;
  for (std::size_t w = 0; w < work; ++w) work_qubits.push_back(static_cast<Qubit>(semantic + w));

  auto emit_plain = [&](const Gate& g) {
    switch (g.kind) {
      case GateKind::H: out << "h " << name(g.target) << ";\n"; return;
      case GateKind::X: out << "x " << name(g.target) << ";\n"; return;
      case GateKind::CX: out << "cx " << name(g.controls[0]) << ',' << name(g.target) << ";\n"; return;
      case GateKind::MCT:
        out << (g.controls.size() == 2 ? std::string("ccx") : mct_macro_name(g.controls.size())) << ' ';
        for (auto q : g.controls) out << name(q) << ',';
        out << name(g.target) << ";\n";
        return;
    }
  };

  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MCT && g.controls.size() >= 3 && policy == McxPolicy::CcxVChain) {
      for (const auto& piece : vchain_decompose(g.controls, g.target, work_qubits)) emit_plain(piece);
    } else {
      emit_plain(g);
    }
  }
  for (std::size_t i = 0; i < layout.inputs; ++i) out << "measure q[" << i << "] -> c[" << i << "];\n";
  return out.str();
}

namespace detail {

struct QasmToken {
  enum Kind { Ident, Number, String, Symbol, End } kind = End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class QasmLexer {
 public:
  explicit QasmLexer(std::string_view src) : src_(src) {}

  std::vector<QasmToken> tokenize(std::optional<std::string>& metadata_line) {
    std::vector<QasmToken> tokens;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) break;
      if (src_.compare(pos_, 2, "//") == 0) {
        auto end = src_.find('\n', pos_);
        auto text = src_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
        if (text.starts_with("// qclique:")) metadata_line = std::string(text);
        advance(text.size());
        continue;
      }
      QasmToken t;
      t.line = line_;
      t.column = column_;
      char ch = src_[pos_];
      std::size_t len = 1;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        t.kind = QasmToken::Ident;
        while (pos_ + len < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_ + len])) || src_[pos_ + len] == '_'))
          ++len;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.kind = QasmToken::Number;
        while (pos_ + len < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_ + len])) || src_[pos_ + len] == '.'))
          ++len;
      } else if (ch == '"') {
        t.kind = QasmToken::String;
        auto close = src_.find('"', pos_ + 1);
        if (close == std::string_view::npos) throw ParseError("unterminated string", line_, column_);
        len = close - pos_ + 1;
      } else {
        t.kind = QasmToken::Symbol;
        if (src_.compare(pos_, 2, "->") == 0) len = 2;
      }
      t.text = std::string(src_.substr(pos_, len));
      advance(len);
      tokens.push_back(std::move(t));
    }
    QasmToken end;
    end.line = line_;
    end.column = column_;
    tokens.push_back(end);
    return tokens;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance(1);
  }

  void advance(std::size_t count) {
    for (std::size_t i = 0; i < count && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline CircuitMetadata parse_metadata_comment(const std::string& line) {
  CircuitMetadata md;
  std::istringstream in(line.substr(std::string_view("// qclique:").size()));
  std::string field;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    auto key = field.substr(0, eq);
    auto value = field.substr(eq + 1);
    std::uint64_t v = 0;
    int base = key == "graph" ? 16 : 10;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v, base);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw ParseError("bad metadata field \"" + field + "\"", 1);
    if (key == "n") md.n = v;
    else if (key == "k") md.k = v;
    else if (key == "graph") md.graph_hash = v;
    else if (key == "iterations") md.iterations = v;
    else if (key == "solutions") md.solutions = v;
    else if (key == "pruned") md.pruned_combinations = v;
    else if (key == "pruned_gates") md.pruned_gates = v;
  }
  return md;
}

class QasmParser {
 public:
  explicit QasmParser(std::string_view text) {
    tokens_ = QasmLexer(text).tokenize(metadata_line_);
  }

  Circuit parse() {
    expect_ident("OPENQASM");
    expect(QasmToken::Number);
    expect_symbol(";");
    while (peek().kind != QasmToken::End) statement();

    QubitLayout layout;
    if (qreg_size_ > 0) {
      if (qreg_size_ < creg_size_ + 2)
        throw ParseError("qreg q must hold the inputs plus T and O", qreg_line_);
      layout.inputs = creg_size_;
      layout.edge_ancillas = qreg_size_ - creg_size_ - 2;
    }
    layout.work = work_size_;
    std::optional<CircuitMetadata> md;
    if (metadata_line_) md = parse_metadata_comment(*metadata_line_);
    // Undo the emitter's preparation of O; a file without it started O at
    // |0>, which is init_state followed by X on O.
    if (!layout.is_empty()) {
      const auto prep = Gate::x(layout.output());
      if (!gates_.empty() && gates_.front() == prep) gates_.erase(gates_.begin());
      else gates_.insert(gates_.begin(), prep);
    }
    Circuit c(layout, md);
    for (auto& g : gates_) c.append(std::move(g));
    return c;
  }

 private:
  const QasmToken& peek() const { return tokens_[pos_]; }
  const QasmToken& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what, const QasmToken& at) const {
    throw ParseError(what, at.line, at.column);
  }

  const QasmToken& expect(QasmToken::Kind kind) {
    const auto& t = next();
    if (t.kind != kind) fail("unexpected token \"" + t.text + "\"", t);
    return t;
  }

  void expect_symbol(std::string_view s) {
    const auto& t = next();
    if (t.kind != QasmToken::Symbol || t.text != s) fail("expected \"" + std::string(s) + "\", got \"" + t.text + "\"", t);
  }

  void expect_ident(std::string_view s) {
    const auto& t = next();
    if (t.kind != QasmToken::Ident || t.text != s) fail("expected \"" + std::string(s) + "\", got \"" + t.text + "\"", t);
  }

  std::size_t expect_index() {
    const auto& t = expect(QasmToken::Number);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail("expected an integer", t);
    return v;
  }

  Qubit qubit_arg() {
    const auto& reg = expect(QasmToken::Ident);
    expect_symbol("[");
    const auto& idx_tok = peek();
    std::size_t idx = expect_index();
    expect_symbol("]");
    if (reg.text == "q") {
      if (idx >= qreg_size_) fail("qubit index out of range for q", idx_tok);
      return static_cast<Qubit>(idx);
    }
    if (reg.text == "w") {
      if (idx >= work_size_) fail("qubit index out of range for w", idx_tok);
      return static_cast<Qubit>(qreg_size_ + idx);
    }
    fail("unknown quantum register \"" + reg.text + "\"", reg);
  }

  std::vector<Qubit> qubit_args() {
    std::vector<Qubit> out{qubit_arg()};
    while (peek().kind == QasmToken::Symbol && peek().text == ",") {
      next();
      out.push_back(qubit_arg());
    }
    expect_symbol(";");
    return out;
  }

  static std::optional<std::size_t> macro_arity(std::string_view name) {
    if (!name.starts_with("mct") || name.size() == 3) return std::nullopt;
    std::size_t v = 0;
    auto digits = name.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return v;
  }

  void statement() {
    const auto& head = next();
    if (head.kind != QasmToken::Ident) fail("unexpected token \"" + head.text + "\"", head);
    const std::string& word = head.text;

    if (word == "include") {
      expect(QasmToken::String);
      expect_symbol(";");
    } else if (word == "gate") {
      gate_declaration();
    } else if (word == "qreg" || word == "creg") {
      const auto& reg = expect(QasmToken::Ident);
      expect_symbol("[");
      std::size_t size = expect_index();
      expect_symbol("]");
      expect_symbol(";");
      if (!gates_.empty()) fail("register declared after the first gate", reg);
      if (word == "qreg" && reg.text == "q") {
        qreg_size_ = size;
        qreg_line_ = reg.line;
      } else if (word == "qreg" && reg.text == "w") {
        work_size_ = size;
      } else if (word == "creg" && reg.text == "c") {
        creg_size_ = size;
      } else {
        fail("unsupported register \"" + reg.text + "\"", reg);
      }
    } else if (word == "measure") {
      qubit_arg();
      expect_symbol("->");
      expect_ident("c");
      expect_symbol("[");
      expect_index();
      expect_symbol("]");
      expect_symbol(";");
    } else if (word == "h" || word == "x") {
      auto args = qubit_args();
      if (args.size() != 1) fail(word + " takes one qubit", head);
      gates_.push_back(word == "h" ? Gate::h(args[0]) : Gate::x(args[0]));
    } else if (word == "cx" || word == "ccx" || macros_.contains(word)) {
      auto args = qubit_args();
      std::size_t expected = word == "cx" ? 2 : word == "ccx" ? 3 : macros_.at(word) + 1;
      if (args.size() != expected) fail(word + " takes " + std::to_string(expected) + " qubits", head);
      Qubit target = args.back();
      args.pop_back();
      gates_.push_back(word == "cx" ? Gate::cx(args[0], target) : Gate::mct(std::move(args), target));
    } else {
      fail("unsupported gate \"" + word + "\"", head);
    }
  }

  // Only the emitter's own mct<c> declarations are accepted; their bodies
  // are not interpreted.
  void gate_declaration() {
    const auto& name = expect(QasmToken::Ident);
    auto arity = macro_arity(name.text);
    if (!arity || *arity < 3) fail("unsupported gate declaration \"" + name.text + "\"", name);
    std::size_t args = 0;
    while (peek().kind == QasmToken::Ident) {
      next();
      ++args;
      if (peek().kind == QasmToken::Symbol && peek().text == ",") next();
    }
    if (args != *arity + 1) fail("gate " + name.text + " must declare " + std::to_string(*arity + 1) + " qubits", name);
    expect_symbol("{");
    int depth = 1;
    while (depth > 0) {
      const auto& t = next();
      if (t.kind == QasmToken::End) fail("unterminated gate body", t);
      if (t.kind == QasmToken::Symbol && t.text == "{") ++depth;
      if (t.kind == QasmToken::Symbol && t.text == "}") --depth;
    }
    macros_[name.text] = *arity;
  }

  std::vector<QasmToken> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::string> metadata_line_;
  std::map<std::string, std::size_t> macros_;
  std::size_t qreg_size_ = 0;
  std::size_t qreg_line_ = 1;
  std::size_t work_size_ = 0;
  std::size_t creg_size_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace detail

/// Reads text produced by emit_qasm back into a circuit. Decomposed V-chains
/// stay decomposed: their work qubits become layout.work. A leading `x` on
/// the output line is taken as the emitter's state preparation.
inline Circuit parse_qasm(std::string_view text) { return detail::QasmParser(text).parse(); }

}  // namespace qclique
