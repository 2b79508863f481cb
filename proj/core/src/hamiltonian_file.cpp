#include "geovqe/hamiltonian_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "geovqe/eigensolver.hpp"
#include "geovqe/errors.hpp"
#include "geovqe/fixtures.hpp"
#include "geovqe/state.hpp"
#include "geovqe/text.hpp"

namespace geovqe {

namespace {

std::string at_line(std::string_view origin, int line) {
  return std::string(origin) + ":" + std::to_string(line);
}

void expect_tokens(const std::vector<std::string_view>& tokens, std::size_t n,
                   std::string_view context) {
  if (tokens.size() != n)
    throw ValidationError(std::string(context) + ": expected " + std::to_string(n - 1) +
                          " value(s) after '" + std::string(tokens[0]) + "'");
}

}  // namespace

PauliSum HamiltonianFile::total_hamiltonian() const {
  PauliSum h = electronic;
  if (nuclear_repulsion != 0.0) h += PauliSum::identity(n_qubits, nuclear_repulsion);
  return h;
}

std::optional<MoleculeSpec> HamiltonianFile::molecule() const {
  if (!n_electrons.has_value()) return std::nullopt;
  MoleculeSpec spec;
  spec.n_spin_orbitals = n_qubits;
  spec.n_electrons = *n_electrons;
  spec.label = label;
  return spec;
}

HamiltonianFile parse_hamiltonian_text(std::string_view text, std::string_view origin) {
  HamiltonianFile file;
  bool have_n_qubits = false;
  bool have_label = false, have_nrep = false, have_ne = false, have_ehf = false,
       have_efci = false;
  std::vector<PauliTerm> terms;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string ctx = at_line(origin, line_no);
    const std::string_view key = tokens[0];

    if (key == "n_qubits") {
      expect_tokens(tokens, 2, ctx);
      if (have_n_qubits) throw ValidationError(ctx + ": duplicate n_qubits");
      const long long n = parse_int_token(tokens[1], ctx);
      if (n < 1 || n > 64) throw ValidationError(ctx + ": n_qubits must be in 1..64");
      file.n_qubits = static_cast<int>(n);
      have_n_qubits = true;
    } else if (key == "n_electrons") {
      expect_tokens(tokens, 2, ctx);
      if (have_ne) throw ValidationError(ctx + ": duplicate n_electrons");
      file.n_electrons = static_cast<int>(parse_int_token(tokens[1], ctx));
      have_ne = true;
    } else if (key == "label") {
      expect_tokens(tokens, 2, ctx);
      if (have_label) throw ValidationError(ctx + ": duplicate label");
      file.label = std::string(tokens[1]);
      have_label = true;
    } else if (key == "nuclear_repulsion") {
      expect_tokens(tokens, 2, ctx);
      if (have_nrep) throw ValidationError(ctx + ": duplicate nuclear_repulsion");
      file.nuclear_repulsion = parse_double_token(tokens[1], ctx);
      if (!std::isfinite(file.nuclear_repulsion))
        throw ValidationError(ctx + ": nuclear_repulsion must be finite");
      have_nrep = true;
    } else if (key == "e_hf") {
      expect_tokens(tokens, 2, ctx);
      if (have_ehf) throw ValidationError(ctx + ": duplicate e_hf");
      file.e_hf = parse_double_token(tokens[1], ctx);
      have_ehf = true;
    } else if (key == "e_fci") {
      expect_tokens(tokens, 2, ctx);
      if (have_efci) throw ValidationError(ctx + ": duplicate e_fci");
      file.e_fci = parse_double_token(tokens[1], ctx);
      have_efci = true;
    } else if (key == "term") {
      expect_tokens(tokens, 3, ctx);
      if (!have_n_qubits)
        throw ValidationError(ctx + ": term lines must come after n_qubits");
      const double coeff = parse_double_token(tokens[1], ctx);
      if (!std::isfinite(coeff))
        throw ValidationError(ctx + ": term coefficient must be finite");
      if (tokens[2].size() != static_cast<std::size_t>(file.n_qubits))
        throw ValidationError(ctx + ": pauli label length " +
                              std::to_string(tokens[2].size()) + " != n_qubits " +
                              std::to_string(file.n_qubits));
      PauliString s;
      try {
        s = PauliString::from_label(tokens[2]);
      } catch (const ValidationError& e) {
        throw ValidationError(ctx + ": " + e.what());
      }
      terms.push_back({coeff, s});
    } else {
      throw ValidationError(ctx + ": unknown key '" + std::string(key) + "'");
    }
  }

  if (!have_n_qubits)
    throw ValidationError(std::string(origin) + ": missing required key n_qubits");
  file.electronic = PauliSum(file.n_qubits, std::move(terms));
  if (!file.electronic.is_hermitian())
    throw ValidationError(std::string(origin) + ": Hamiltonian is not Hermitian");
  if (file.n_electrons.has_value()) file.molecule()->validate();
  return file;
}

HamiltonianFile parse_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open Hamiltonian file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read error on Hamiltonian file: " + path.string());
  return parse_hamiltonian_text(buf.str(), path.string());
}

std::string serialize_hamiltonian(const HamiltonianFile& file) {
  std::ostringstream out;
  out << "n_qubits " << file.n_qubits << "\n";
  if (file.n_electrons) out << "n_electrons " << *file.n_electrons << "\n";
  if (!file.label.empty()) out << "label " << file.label << "\n";
  out << "nuclear_repulsion " << format_double(file.nuclear_repulsion) << "\n";
  if (file.e_hf) out << "e_hf " << format_double(*file.e_hf) << "\n";
  if (file.e_fci) out << "e_fci " << format_double(*file.e_fci) << "\n";
  for (const auto& term : file.electronic.terms())
    out << "term " << format_double(term.coeff.real()) << " " << term.string.label()
        << "\n";
  return out.str();
}

void write_hamiltonian(const std::filesystem::path& path, const HamiltonianFile& file) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write Hamiltonian file: " + path.string());
  out << serialize_hamiltonian(file);
  if (!out) throw IoError("write error on Hamiltonian file: " + path.string());
}

void validate_stored_references(const HamiltonianFile& file, double tol,
                                std::uint64_t seed) {
  const PauliSum h = file.total_hamiltonian();
  if (file.e_fci) {
    const double computed = reference_ground_energy(h, seed).energy;
    if (std::abs(computed - *file.e_fci) > tol)
      throw ValidationError("stored e_fci " + format_double(*file.e_fci) +
                            " disagrees with recomputed ground energy " +
                            format_double(computed));
  }
  if (file.e_hf && file.molecule()) {
    const double computed = expectation(h, hf_reference(*file.molecule()));
    if (std::abs(computed - *file.e_hf) > tol)
      throw ValidationError("stored e_hf " + format_double(*file.e_hf) +
                            " disagrees with recomputed reference energy " +
                            format_double(computed));
  }
}

HamiltonianFile load_hamiltonian_source(const std::string& source) {
  constexpr std::string_view prefix = "fixture:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    const auto text = builtin_fixture_text(name);
    if (!text) {
      std::string known;
      for (const auto& n : builtin_fixture_names()) {
        if (!known.empty()) known += ", ";
        known += n;
      }
      throw ValidationError("unknown fixture '" + name + "' (available: " + known + ")");
    }
    return parse_hamiltonian_text(*text, "<" + source + ">");
  }
  return parse_hamiltonian(source);
}

}  // namespace geovqe
