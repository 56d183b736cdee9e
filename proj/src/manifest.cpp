#include "tcurv/manifest.hpp"

#include "tcurv/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace tcurv {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Rational parse_rational_at(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const std::invalid_argument& e) {
    throw parse_error(line, e.what());
  }
}

int parse_index_at(const std::string& tok, int line, int dim, const char* what) {
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw parse_error(line, std::string("bad ") + what + " '" + tok + "'");
  if (tok.empty()) throw parse_error(line, std::string("bad ") + what);
  long v = 0;
  try {
    v = std::stol(tok);
  } catch (const std::out_of_range&) {
    v = 0;
  }
  if (v < 1 || v > dim)
    throw parse_error(line, std::string(what) + " " + tok + " out of range 1.." +
                                std::to_string(dim));
  return static_cast<int>(v);
}

struct Section {
  std::string name;
  int header_line = 0;
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)
};

}  // namespace

Manifest parse_manifest(std::string_view text) {
  // Split into lines, strip comments, group by section.
  std::vector<Section> sections;
  std::vector<std::string> leading_comments;
  bool seen_section = false;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    size_t hash = raw.find('#');
    std::string_view code = hash == std::string_view::npos ? raw : raw.substr(0, hash);
    std::string content = trim(code);

    if (content.empty()) {
      if (!seen_section && hash != std::string_view::npos)
        leading_comments.push_back(trim(raw.substr(hash + 1)));
      continue;
    }
    if (content.front() == '[') {
      if (content.back() != ']') throw parse_error(line_no, "malformed section header");
      std::string name = trim(std::string_view(content).substr(1, content.size() - 2));
      static const char* known[] = {"manifold", "metric", "brackets", "phi", "xi", "eta",
                                    "tparams"};
      bool ok = false;
      for (const char* k : known) ok = ok || name == k;
      if (!ok) throw parse_error(line_no, "unknown section [" + name + "]");
      for (const auto& s : sections)
        if (s.name == name) throw parse_error(line_no, "duplicate section [" + name + "]");
      if (!seen_section && name != "manifold")
        throw parse_error(line_no, "[manifold] must be the first section");
      seen_section = true;
      sections.push_back(Section{name, line_no, {}});
      continue;
    }
    if (!seen_section) throw parse_error(line_no, "content before the first section");
    sections.back().lines.emplace_back(line_no, content);
  }

  if (sections.empty() || sections[0].name != "manifold")
    throw parse_error(1, "missing required section [manifold]");

  Manifest m;
  m.comments = std::move(leading_comments);

  // [manifold]
  int dim = 0;
  std::optional<Rational> epsilon;
  {
    const Section& sec = sections[0];
    std::map<std::string, int> seen;
    for (const auto& [ln, content] : sec.lines) {
      size_t eq = content.find('=');
      if (eq == std::string::npos) throw parse_error(ln, "expected 'key = value'");
      std::string key = trim(std::string_view(content).substr(0, eq));
      std::string value = trim(std::string_view(content).substr(eq + 1));
      if (seen.count(key)) throw parse_error(ln, "duplicate key '" + key + "'");
      seen[key] = ln;
      if (key == "dim") {
        for (char ch : value)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw parse_error(ln, "bad dim '" + value + "'");
        if (value.empty()) throw parse_error(ln, "bad dim");
        try {
          dim = static_cast<int>(std::stol(value));
        } catch (const std::out_of_range&) {
          throw parse_error(ln, "dim out of range");
        }
        if (dim < 2) throw parse_error(ln, "dim must be at least 2");
        if (dim > 16) throw parse_error(ln, "dim too large for dense storage");
      } else if (key == "epsilon") {
        Rational e = parse_rational_at(value, ln);
        if (e != Rational(1) && e != Rational(-1))
          throw parse_error(ln, "epsilon must be 1 or -1");
        epsilon = e;
      } else if (key == "name") {
        if (value.empty()) throw parse_error(ln, "empty name");
        m.name = value;
      } else {
        throw parse_error(ln, "unknown key '" + key + "' in [manifold]");
      }
    }
    if (dim == 0) throw parse_error(sec.header_line, "missing 'dim' in [manifold]");
  }

  m.frame = FrameSpec::make(dim);

  auto find_section = [&](const std::string& name) -> const Section* {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  };

  auto parse_rows = [&](const Section& sec, int rows, Tensor& out, bool matrix) {
    if (static_cast<int>(sec.lines.size()) != rows)
      throw parse_error(sec.header_line,
                        "[" + sec.name + "] needs " + std::to_string(rows) + " row(s), got " +
                            std::to_string(sec.lines.size()));
    for (int r = 0; r < rows; ++r) {
      const auto& [ln, content] = sec.lines[static_cast<std::size_t>(r)];
      std::vector<std::string> toks = split_ws(content);
      if (static_cast<int>(toks.size()) != dim)
        throw parse_error(ln, "expected " + std::to_string(dim) + " entries, got " +
                                  std::to_string(toks.size()));
      for (int c = 0; c < dim; ++c) {
        Rational v = parse_rational_at(toks[static_cast<std::size_t>(c)], ln);
        if (matrix)
          out(r, c) = v;
        else
          out(c) = v;
      }
    }
  };

  // [metric]
  {
    const Section* sec = find_section("metric");
    if (!sec) throw parse_error(line_no, "missing required section [metric]");
    parse_rows(*sec, dim, m.frame.g, true);
  }

  // [brackets]
  if (const Section* sec = find_section("brackets")) {
    std::map<std::pair<int, int>, int> seen_pairs;
    for (const auto& [ln, content] : sec->lines) {
      size_t eq = content.find('=');
      if (eq == std::string::npos) throw parse_error(ln, "expected 'i j = k:coeff ...'");
      std::vector<std::string> lhs = split_ws(trim(std::string_view(content).substr(0, eq)));
      if (lhs.size() != 2) throw parse_error(ln, "bracket pair must be two indices");
      int i = parse_index_at(lhs[0], ln, dim, "bracket index");
      int j = parse_index_at(lhs[1], ln, dim, "bracket index");
      if (i >= j) throw parse_error(ln, "bracket pair must have i < j");
      if (seen_pairs.count({i, j}))
        throw parse_error(ln, "duplicate bracket pair " + lhs[0] + " " + lhs[1]);
      seen_pairs[{i, j}] = ln;
      std::vector<std::string> terms = split_ws(trim(std::string_view(content).substr(eq + 1)));
      std::map<int, int> seen_k;
      for (const auto& term : terms) {
        size_t colon = term.find(':');
        if (colon == std::string::npos)
          throw parse_error(ln, "bracket term must be 'k:coeff', got '" + term + "'");
        int k = parse_index_at(term.substr(0, colon), ln, dim, "bracket component");
        if (seen_k.count(k))
          throw parse_error(ln, "duplicate component " + std::to_string(k) + " in bracket");
        seen_k[k] = ln;
        Rational coeff = parse_rational_at(term.substr(colon + 1), ln);
        m.frame.set_bracket(i - 1, j - 1, k - 1, coeff);
      }
    }
  }

  // paracontact group: phi, xi, eta all-or-none; epsilon required with it
  {
    const Section* sphi = find_section("phi");
    const Section* sxi = find_section("xi");
    const Section* seta = find_section("eta");
    int present = (sphi != nullptr) + (sxi != nullptr) + (seta != nullptr);
    if (present != 0 && present != 3) {
      const Section* any = sphi ? sphi : (sxi ? sxi : seta);
      throw parse_error(any->header_line, "[phi], [xi] and [eta] must be given together");
    }
    if (present == 3) {
      if (!epsilon)
        throw parse_error(sphi->header_line,
                          "paracontact sections need 'epsilon' in [manifold]");
      ParacontactSpec pc = ParacontactSpec::make(dim, *epsilon);
      // row i of [phi] holds the components of phi e_i, so phi(j,i) = row_i[j]
      Tensor rows(dim, {Slot::Down, Slot::Down});
      parse_rows(*sphi, dim, rows, true);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) pc.phi(j, i) = rows(i, j);
      parse_rows(*sxi, 1, pc.xi, false);
      parse_rows(*seta, 1, pc.eta, false);
      m.pc = std::move(pc);
    } else if (epsilon) {
      throw parse_error(sections[0].header_line,
                        "'epsilon' given but [phi]/[xi]/[eta] are missing");
    }
  }

  // [tparams]
  if (const Section* sec = find_section("tparams")) {
    TParamsSource src;
    std::array<std::optional<Rational>, 8> a;
    std::map<std::string, int> seen;
    for (const auto& [ln, content] : sec->lines) {
      size_t eq = content.find('=');
      if (eq == std::string::npos) throw parse_error(ln, "expected 'key = value'");
      std::string key = trim(std::string_view(content).substr(0, eq));
      std::string value = trim(std::string_view(content).substr(eq + 1));
      if (seen.count(key)) throw parse_error(ln, "duplicate key '" + key + "'");
      seen[key] = ln;
      if (key == "preset") {
        bool known = false;
        for (const auto& n : preset_names()) known = known || n == value;
        if (!known) throw parse_error(ln, "unknown preset '" + value + "'");
        src.preset = value;
      } else if (key.size() == 2 && key[0] == 'a' && key[1] >= '0' && key[1] <= '7') {
        a[static_cast<std::size_t>(key[1] - '0')] = parse_rational_at(value, ln);
      } else {
        throw parse_error(ln, "unknown key '" + key + "' in [tparams]");
      }
    }
    bool any_a = false, all_a = true;
    for (const auto& v : a) {
      any_a = any_a || v.has_value();
      all_a = all_a && v.has_value();
    }
    if (src.preset && any_a)
      throw parse_error(sec->header_line, "[tparams] takes 'preset' or a0..a7, not both");
    if (!src.preset) {
      if (!all_a)
        throw parse_error(sec->header_line, "[tparams] needs all of a0..a7 or a preset");
      std::array<Rational, 8> full;
      for (std::size_t q = 0; q < 8; ++q) full[q] = *a[q];
      src.explicit_params = full;
    }
    m.tparams = std::move(src);
  }

  return m;
}

std::string serialize_manifest(const Manifest& m) {
  std::ostringstream out;
  for (const auto& c : m.comments) out << "# " << c << "\n";
  out << "[manifold]\n";
  if (m.name) out << "name = " << *m.name << "\n";
  out << "dim = " << m.frame.dim << "\n";
  if (m.pc) out << "epsilon = " << m.pc->eps.str() << "\n";

  const int dim = m.frame.dim;
  out << "\n[metric]\n";
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out << (j ? " " : "") << m.frame.g(i, j).str();
    out << "\n";
  }

  out << "\n[brackets]\n";
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      bool nonzero = false;
      for (int k = 0; k < dim; ++k) nonzero = nonzero || !m.frame.c(k, i, j).is_zero();
      if (!nonzero) continue;
      out << (i + 1) << " " << (j + 1) << " =";
      for (int k = 0; k < dim; ++k)
        if (!m.frame.c(k, i, j).is_zero())
          out << " " << (k + 1) << ":" << m.frame.c(k, i, j).str();
      out << "\n";
    }

  if (m.pc) {
    out << "\n[phi]\n";
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) out << (j ? " " : "") << m.pc->phi(j, i).str();
      out << "\n";
    }
    out << "\n[xi]\n";
    for (int i = 0; i < dim; ++i) out << (i ? " " : "") << m.pc->xi(i).str();
    out << "\n";
    out << "\n[eta]\n";
    for (int i = 0; i < dim; ++i) out << (i ? " " : "") << m.pc->eta(i).str();
    out << "\n";
  }

  if (m.tparams) {
    out << "\n[tparams]\n";
    if (m.tparams->preset) {
      out << "preset = " << *m.tparams->preset << "\n";
    } else {
      for (std::size_t q = 0; q < 8; ++q)
        out << "a" << q << " = " << (*m.tparams->explicit_params)[q].str() << "\n";
    }
  }

  return out.str();
}

}  // namespace tcurv
