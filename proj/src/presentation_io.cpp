#include "workbench/paperdata.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wb::paper {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

std::string word_str(const pc::Exps& w) {
  std::string s;
  for (std::size_t g = 0; g < w.size(); ++g) {
    if (w[g] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(g + 1) + "^" + std::to_string(w[g]);
  }
  return s.empty() ? "1" : s;
}

bool trivial(const pc::Exps& w) {
  for (int v : w)
    if (v) return false;
  return true;
}

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    if (line[i] == '=') {
      ++i;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=' &&
             line[i] != '#')
        ++i;
    }
    out.push_back({line.substr(b, i - b), static_cast<int>(b) + 1});
  }
  return out;
}

long parse_int(const Token& t, int line, const char* what) {
  if (t.text.empty() || t.text.size() > 9) throw ParseError(line, t.column, std::string("expected ") + what);
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line, t.column, std::string("expected ") + what);
  return std::stol(t.text);
}

struct Pending {
  int line = 0;
  int order = 0, id = 0;
  std::optional<pc::PcPresentation> pres;
};

}  // namespace

std::string serialize(const GroupRecord& r) {
  std::ostringstream os;
  const auto& p = r.pres;
  os << "group " << r.order << " " << r.id << "\n";
  os << "gens " << p.n() << "\n";
  for (int i = 0; i < p.n(); ++i)
    if (!trivial(p.power(i))) os << "pow " << i + 1 << " = " << word_str(p.power(i)) << "\n";
  for (int j = 1; j < p.n(); ++j)
    for (int i = 0; i < j; ++i)
      if (!trivial(p.comm(j, i))) os << "comm " << j + 1 << " " << i + 1 << " = " << word_str(p.comm(j, i)) << "\n";
  return os.str();
}

std::string serialize(const std::vector<GroupRecord>& rs) {
  std::string s;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += "\n";
    s += serialize(rs[i]);
  }
  return s;
}

std::vector<GroupRecord> parse_presentations(const std::string& text) {
  std::vector<GroupRecord> out;
  Pending cur;
  bool open = false;

  auto finish = [&]() {
    if (!open) return;
    if (!cur.pres) throw ParseError(cur.line, 1, "group has no gens line");
    auto rep = pc::verify_consistency(*cur.pres, 0);
    if (!rep.ok()) throw ParseError(cur.line, 1, "presentation is inconsistent: " + rep.failures.front());
    GroupRecord r;
    r.order = cur.order;
    r.id = cur.id;
    r.pres = *cur.pres;
    if (r.order == 243) {
      r.family = family_of(r.id);
      if (r.family) r.expected_class = family_class(r.family);
    }
    out.push_back(std::move(r));
    open = false;
  };

  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    auto t = tokenize(raw);
    if (t.empty()) continue;
    const std::string& kw = t[0].text;
    if (kw == "group") {
      finish();
      if (t.size() != 3) throw ParseError(ln, t[0].column, "expected: group <order> <id>");
      cur = Pending{};
      cur.line = ln;
      cur.order = static_cast<int>(parse_int(t[1], ln, "group order"));
      cur.id = static_cast<int>(parse_int(t[2], ln, "group id"));
      open = true;
      continue;
    }
    if (!open) throw ParseError(ln, t[0].column, "relation before any group header");
    if (kw == "gens") {
      if (cur.pres) throw ParseError(ln, t[0].column, "duplicate gens line");
      if (t.size() != 2) throw ParseError(ln, t[0].column, "expected: gens <n>");
      long n = parse_int(t[1], ln, "generator count");
      if (n < 1 || n > 16) throw ParseError(ln, t[1].column, "generator count out of range");
      long ord = 1;
      for (long i = 0; i < n; ++i) ord *= pc::kPrime;
      if (ord != cur.order) throw ParseError(ln, t[1].column, "order " + std::to_string(cur.order) + " is not 3^" + std::to_string(n));
      cur.pres.emplace(static_cast<int>(n), std::to_string(cur.order) + ":" + std::to_string(cur.id));
      continue;
    }
    if (kw != "pow" && kw != "comm") throw ParseError(ln, t[0].column, "unknown keyword '" + kw + "'");
    if (!cur.pres) throw ParseError(ln, t[0].column, "relation before gens line");
    const int n = cur.pres->n();
    const std::size_t nidx = kw == "pow" ? 1 : 2;
    if (t.size() < nidx + 2 || t[nidx + 1].text != "=")
      throw ParseError(ln, t[0].column, "expected: " + kw + (kw == "pow" ? " <i>" : " <j> <i>") + " = <word>");
    std::vector<int> idx;
    for (std::size_t k = 1; k <= nidx; ++k) {
      long v = parse_int(t[k], ln, "generator index");
      if (v < 1 || v > n) throw ParseError(ln, t[k].column, "generator index out of range");
      idx.push_back(static_cast<int>(v) - 1);
    }
    pc::Exps w(n, 0);
    int last = -1;
    for (std::size_t k = nidx + 2; k < t.size(); ++k) {
      const Token& tok = t[k];
      if (tok.text == "1" && t.size() == nidx + 3) break;
      auto caret = tok.text.find('^');
      if (tok.text.size() < 2 || tok.text[0] != 'g') throw ParseError(ln, tok.column, "expected g<k>^<e>");
      Token gk{tok.text.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), tok.column + 1};
      long g = parse_int(gk, ln, "generator in word");
      long e = 1;
      if (caret != std::string::npos) {
        Token et{tok.text.substr(caret + 1), tok.column + static_cast<int>(caret) + 1};
        e = parse_int(et, ln, "exponent");
      }
      if (g < 1 || g > n) throw ParseError(ln, tok.column, "generator out of range");
      if (e < 1 || e >= pc::kPrime) throw ParseError(ln, tok.column, "exponent must be 1 or 2");
      if (g - 1 <= last) throw ParseError(ln, tok.column, "word must list generators in increasing order");
      last = static_cast<int>(g) - 1;
      w[g - 1] = static_cast<int>(e);
    }
    try {
      if (kw == "pow") cur.pres->set_power(idx[0], w);
      else {
        if (idx[0] <= idx[1]) throw ParseError(ln, t[1].column, "comm needs j > i");
        cur.pres->set_comm(idx[0], idx[1], w);
      }
    } catch (const pc::PcError& e) {
      throw ParseError(ln, t[nidx + 1].column, e.what());
    }
  }
  finish();
  return out;
}

std::vector<GroupRecord> ingest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_presentations(ss.str());
}

}  // namespace wb::paper
