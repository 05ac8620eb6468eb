#include "medianlab/presentation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

#include "medianlab/error.hpp"
#include "medianlab/parallel.hpp"

namespace medianlab {

namespace {

const std::unordered_set<std::string> kReserved = {
    "gens", "rel", "fam", "I", "n", "if", "else", "in", "notin", "comm", "all"};

[[noreturn]] void parse_fail(const std::string& text, std::size_t offset, const std::string& msg) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

enum class TokKind { Ident, Int, Punct, End };

struct Tok {
  TokKind kind = TokKind::End;
  std::string text;
  long long value = 0;
  std::size_t offset = 0;
};

std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Tok t;
    t.offset = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = TokKind::Ident;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = TokKind::Int;
      t.text = text.substr(i, j - i);
      t.value = std::strtoll(t.text.c_str(), nullptr, 10);
      i = j;
    } else if (c == '>' && i + 1 < text.size() && text[i + 1] == '=') {
      t.kind = TokKind::Punct;
      t.text = ">=";
      i += 2;
    } else if (std::string("^[](),;={}:-").find(c) != std::string::npos) {
      t.kind = TokKind::Punct;
      t.text = std::string(1, c);
      ++i;
    } else {
      parse_fail(text, i, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Tok end;
  end.offset = text.size();
  out.push_back(end);
  return out;
}

struct Parser {
  const std::string& text;
  std::vector<Tok> toks;
  std::size_t p = 0;
  FinitePresentation out;
  std::set<std::string> gen_set;
  std::size_t fam_clause_offset = 0;  // for late validation messages

  explicit Parser(const std::string& t) : text(t), toks(lex(t)) {}

  const Tok& peek() const { return toks[p]; }
  Tok take() { return toks[p++]; }
  [[noreturn]] void fail(const Tok& at, const std::string& msg) { parse_fail(text, at.offset, msg); }

  bool punct(const char* s) const { return peek().kind == TokKind::Punct && peek().text == s; }
  bool ident(const char* s) const { return peek().kind == TokKind::Ident && peek().text == s; }
  void expect_punct(const char* s) {
    if (!punct(s)) fail(peek(), std::string("expected '") + s + "'");
    ++p;
  }

  // True when the current token can begin a word atom.
  bool starts_atom() const {
    const Tok& t = peek();
    if (t.kind == TokKind::Ident)
      return t.text == "comm" || !kReserved.count(t.text) || gen_set.count(t.text);
    if (t.kind == TokKind::Int) return t.value == 1;
    return t.kind == TokKind::Punct && (t.text == "[" || t.text == "(");
  }

  // exponent := '-'? (INT | 'n'); returns (coeff of n, constant)
  std::pair<long long, long long> parse_exponent(bool allow_n) {
    long long sign = 1;
    if (punct("-")) {
      ++p;
      sign = -1;
    }
    const Tok& t = peek();
    if (t.kind == TokKind::Int) {
      ++p;
      return {0, sign * t.value};
    }
    if (t.kind == TokKind::Ident && t.text == "n") {
      if (!allow_n) fail(t, "symbolic exponent outside fam clause");
      ++p;
      return {sign, 0};
    }
    fail(t, "expected an integer or n after '^'");
  }

  SymWord parse_word(bool allow_n) {
    SymWord word;
    const Tok& start = peek();
    while (starts_atom()) {
      const Tok& t = peek();
      if (t.kind == TokKind::Int) {  // literal 1: the empty word
        ++p;
        continue;
      }
      if (t.kind == TokKind::Ident && !(t.text == "comm" && toks[p + 1].text == "(")) {
        if (!gen_set.count(t.text)) fail(t, "unknown generator '" + t.text + "'");
        ++p;
        SymLetter letter{t.text, 0, 1};
        if (punct("^")) {
          ++p;
          auto [coeff, cnst] = parse_exponent(allow_n);
          letter.coeff = coeff;
          letter.cnst = cnst;
        }
        if (letter.coeff != 0 || letter.cnst != 0) word.push_back(letter);
        continue;
      }
      // Grouped atom: [u,v], comm(u,v) or (w), with an optional integer power.
      SymWord inner;
      if (punct("[") || (t.kind == TokKind::Ident && t.text == "comm")) {
        if (t.kind == TokKind::Ident) ++p;  // 'comm'
        const char* close = punct("[") ? "]" : ")";
        ++p;
        SymWord u = parse_word(allow_n);
        expect_punct(",");
        SymWord v = parse_word(allow_n);
        expect_punct(close);
        inner = u;
        inner.insert(inner.end(), v.begin(), v.end());
        SymWord ui = invert(u), vi = invert(v);
        inner.insert(inner.end(), ui.begin(), ui.end());
        inner.insert(inner.end(), vi.begin(), vi.end());
      } else {  // '('
        ++p;
        inner = parse_word(allow_n);
        expect_punct(")");
      }
      long long reps = 1;
      if (punct("^")) {
        const Tok& caret = peek();
        ++p;
        auto [coeff, cnst] = parse_exponent(allow_n);
        if (coeff != 0) fail(caret, "symbolic exponent requires a single generator");
        reps = cnst;
      }
      SymWord base = reps < 0 ? invert(inner) : inner;
      for (long long r = 0; r < std::llabs(reps); ++r)
        word.insert(word.end(), base.begin(), base.end());
    }
    if (word.empty() && &start == &peek() && start.kind != TokKind::Int &&
        !(start.kind == TokKind::Punct && (start.text == "," || start.text == ";" ||
                                           start.text == "=" || start.text == "]" ||
                                           start.text == ")")) &&
        start.kind != TokKind::End && !(start.kind == TokKind::Ident))
      fail(start, "expected a word");
    return word;
  }

  void require_gens(const Tok& at) {
    if (out.gens.empty() && gen_set.empty())
      fail(at, "generators must be declared before relators");
  }

  void parse_gens_clause() {
    expect_punct(":");
    while (peek().kind == TokKind::Ident) {
      Tok t = take();
      if (kReserved.count(t.text)) fail(t, "'" + t.text + "' is reserved");
      if (gen_set.count(t.text)) fail(t, "duplicate generator '" + t.text + "'");
      gen_set.insert(t.text);
      out.gens.push_back(t.text);
    }
  }

  void parse_rel_clause() {
    expect_punct(":");
    while (true) {
      Tok at = peek();
      SymWord lhs = parse_word(false);
      if (lhs.empty() && at.kind == TokKind::Punct && at.text != "(" && at.text != "[")
        fail(at, "expected a relator");
      if (punct("=")) {
        ++p;
        SymWord rhs = parse_word(false);
        SymWord ri = invert(rhs);
        lhs.insert(lhs.end(), ri.begin(), ri.end());
      }
      out.relators.push_back(std::move(lhs));
      if (!punct(",")) break;
      ++p;
    }
  }

  void parse_fam_clause(std::size_t head_offset) {
    fam_clause_offset = head_offset;
    expect_punct("(");
    if (!ident("n")) fail(peek(), "expected 'n' in fam(n>=1)");
    ++p;
    expect_punct(">=");
    if (peek().kind != TokKind::Int || peek().value != 1) fail(peek(), "expected 'n>=1'");
    ++p;
    expect_punct(")");
    expect_punct(":");
    while (true) {
      RelatorFamily fam;
      fam.lhs = parse_word(true);
      if (punct("=")) {
        ++p;
        SymWord first = parse_word(true);
        if (ident("if")) {
          ++p;
          if (!ident("n")) fail(peek(), "expected 'n' after 'if'");
          ++p;
          bool in_branch;
          if (ident("in"))
            in_branch = true;
          else if (ident("notin"))
            in_branch = false;
          else
            fail(peek(), "expected 'in' or 'notin'");
          ++p;
          if (!ident("I")) fail(peek(), "expected 'I'");
          ++p;
          if (!ident("else")) fail(peek(), "expected 'else'");
          ++p;
          SymWord second = parse_word(true);
          fam.conditional = true;
          fam.rhs_in = in_branch ? first : second;
          fam.rhs_notin = in_branch ? second : first;
        } else {
          fam.rhs_in = first;
          fam.rhs_notin = first;
        }
      }
      out.families.push_back(std::move(fam));
      if (!punct(",")) break;
      ++p;
    }
  }

  void parse_set_clause() {
    expect_punct("=");
    std::string raw;
    while (peek().kind != TokKind::End && !punct(";")) raw += take().text;
    Tok at = toks[p];
    try {
      out.twist_set = TwistSet::parse(raw);
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  FinitePresentation run() {
    while (peek().kind != TokKind::End) {
      Tok head = peek();
      if (head.kind != TokKind::Ident)
        fail(head, "expected a clause keyword (gens, rel, fam, I)");
      ++p;
      if (head.text == "gens") {
        parse_gens_clause();
      } else if (head.text == "rel") {
        require_gens(head);
        parse_rel_clause();
      } else if (head.text == "fam") {
        require_gens(head);
        parse_fam_clause(head.offset);
      } else if (head.text == "I") {
        parse_set_clause();
      } else {
        fail(head, "unknown clause '" + head.text + "'");
      }
      if (punct(";"))
        ++p;
      else if (peek().kind != TokKind::End)
        fail(peek(), "expected ';' between clauses");
    }
    finish();
    return std::move(out);
  }

  void finish() {
    std::string shift;
    for (const auto& fam : out.families) {
      if (fam.conditional && !out.twist_set)
        parse_fail(text, fam_clause_offset, "conditional family requires an I clause");
      for (const SymWord* w : {&fam.lhs, &fam.rhs_in, &fam.rhs_notin})
        for (const auto& letter : *w)
          if (letter.coeff != 0) {
            if (shift.empty())
              shift = letter.name;
            else if (shift != letter.name)
              parse_fail(text, fam_clause_offset, "families must share one shift generator");
          }
    }
    out.shift_gen = shift;
  }
};

long long eval_exponent(const SymLetter& letter, long long n) {
  return letter.coeff * n + letter.cnst;
}

}  // namespace

SymWord instantiate(const SymWord& word, long long n) {
  SymWord out;
  for (const auto& letter : word) {
    long long e = eval_exponent(letter, n);
    if (e != 0) out.push_back({letter.name, 0, e});
  }
  return out;
}

SymWord invert(const SymWord& word) {
  SymWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.push_back({it->name, -it->coeff, -it->cnst});
  return out;
}

SymWord RelatorFamily::relator_at(long long n, const std::optional<TwistSet>& set) const {
  const SymWord* rhs = &rhs_notin;
  if (conditional) {
    if (!set) throw Error(ErrorKind::Internal, "conditional family without a set");
    rhs = set->beta(static_cast<int>(n)) == 0 ? &rhs_in : &rhs_notin;
  } else {
    rhs = &rhs_in;
  }
  SymWord rel = instantiate(lhs, n);
  SymWord ri = instantiate(invert(*rhs), n);
  rel.insert(rel.end(), ri.begin(), ri.end());
  return rel;
}

long long FinitePresentation::family_bound(long long shift_order) const {
  if (families.empty()) return 0;
  long long bound = std::max<long long>(1, shift_order);
  // A finite I delays where the conditional branch stabilizes to "notin";
  // past max(I) + period every instance repeats an earlier constraint.
  bool conditional = false;
  for (const auto& fam : families) conditional = conditional || fam.conditional;
  if (conditional && twist_set && !twist_set->is_all() && !twist_set->members().empty())
    bound += twist_set->members().back();
  return bound;
}

std::string word_text(const SymWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter.name;
    if (letter.coeff == 0 && letter.cnst == 1) continue;
    out += '^';
    if (letter.coeff == 0) {
      out += std::to_string(letter.cnst);
    } else {
      std::string sym = letter.coeff == 1    ? "n"
                        : letter.coeff == -1 ? "-n"
                                             : std::to_string(letter.coeff) + "n";
      if (letter.cnst == 0) {
        out += sym;
      } else {
        out += '(' + sym + (letter.cnst > 0 ? "+" : "") + std::to_string(letter.cnst) + ')';
      }
    }
  }
  return out;
}

FinitePresentation parse_presentation(const std::string& text) {
  Parser parser(text);
  FinitePresentation p = parser.run();
  if (p.name.empty()) p.name = "custom";
  return p;
}

namespace {

std::vector<long long> parse_int_args(const std::string& spec, std::size_t count,
                                      const std::string& who) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string piece = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size() || piece.empty() || v < 1)
      throw Error(ErrorKind::InvalidParam, who + ": expected positive integers, got '" + spec + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count)
    throw Error(ErrorKind::InvalidParam,
                who + ": expected " + std::to_string(count) + " parameters, got '" + spec + "'");
  return out;
}

}  // namespace

FinitePresentation builtin_presentation(const std::string& name) {
  std::string text;
  if (name == "lamplighter") {
    text = "gens: a t; rel: a^2; fam(n>=1): comm(t^n a t^-n, a)";
  } else if (name.rfind("GI:I=", 0) == 0) {
    std::string set = name.substr(5);
    TwistSet::parse(set);  // validate before splicing into the grammar
    text =
        "gens: a t z; rel: a^2, z^2, [z,a], [z,t]; "
        "fam(n>=1): comm(t^n a t^-n, a) = 1 if n in I else z; I = " +
        set;
  } else if (name.rfind("vondyck:", 0) == 0) {
    auto abc = parse_int_args(name.substr(8), 3, "vondyck");
    text = "gens: x y z; rel: x^" + std::to_string(abc[0]) + ", y^" + std::to_string(abc[1]) +
           ", z^" + std::to_string(abc[2]) + ", x y z";
  } else if (name.rfind("triangle:", 0) == 0) {
    auto abc = parse_int_args(name.substr(9), 3, "triangle");
    text = "gens: s t u; rel: s^2, t^2, u^2, (s t)^" + std::to_string(abc[0]) + ", (t u)^" +
           std::to_string(abc[1]) + ", (u s)^" + std::to_string(abc[2]);
  } else if (name == "homsphere") {
    text = "gens: x y z; rel: x^2 = x y z, y^3 = x y z, z^7 = x y z";
  } else if (name.rfind("surface:", 0) == 0) {
    long long genus = parse_int_args(name.substr(8), 1, "surface")[0];
    std::string gens = "gens:", rel = " rel:";
    for (long long i = 1; i <= genus; ++i) {
      gens += " a" + std::to_string(i) + " b" + std::to_string(i);
      rel += std::string(i == 1 ? " " : "") + "[a" + std::to_string(i) + ",b" +
             std::to_string(i) + "]";
    }
    text = gens + ";" + rel;
  } else {
    throw Error(ErrorKind::InvalidParam, "unknown presentation '" + name + "'");
  }
  FinitePresentation p = parse_presentation(text);
  p.name = name;
  return p;
}

FinitePresentation resolve_presentation(const std::string& spec) {
  if (spec.find("gens:") != std::string::npos) return parse_presentation(spec);
  return builtin_presentation(spec);
}

namespace {

Element eval_in_model(const SymWord& word, const Group& model,
                      const std::map<std::string, Element>& assignment, long long n) {
  Element acc = model.identity();
  for (const auto& letter : word) {
    auto it = assignment.find(letter.name);
    if (it == assignment.end())
      throw Error(ErrorKind::UnknownGenerator, "no assignment for generator '" + letter.name + "'");
    acc = model.mul(acc, model.power(it->second, eval_exponent(letter, n)));
  }
  return acc;
}

}  // namespace

RelatorCheckReport check_relators(const FinitePresentation& p, const Group& model,
                                  const std::map<std::string, Element>& assignment,
                                  long long n_bound) {
  RelatorCheckReport report;
  Element id = model.identity();
  auto check_one = [&](const SymWord& rel, long long n) {
    Element value = eval_in_model(rel, model, assignment, n);
    ++report.checked;
    if (value == id) return true;
    report.pass = false;
    report.failed_relator = word_text(rel);
    report.failed_n = n;
    report.value = value.str();
    return false;
  };
  for (const auto& rel : p.relators)
    if (!check_one(rel, -1)) return report;
  for (const auto& fam : p.families)
    for (long long n = 1; n <= n_bound; ++n)
      if (!check_one(fam.relator_at(n, p.twist_set), n)) return report;
  return report;
}

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw Error(ErrorKind::InvalidParam, name_ + ": empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::InvalidParam, name_ + ": table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidParam, name_ + ": entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw Error(ErrorKind::InvalidParam, name_ + ": index 0 is not an identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::InvalidParam, name_ + ": multiplication is not associative");
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inv_[static_cast<std::size_t>(a)] < 0)
      throw Error(ErrorKind::InvalidParam, name_ + ": element without inverse");
  }
}

int FiniteGroupTable::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroupTable::power(int a, long long e) const {
  const int ord = element_order(a);
  long long r = e % ord;
  if (r < 0) r += ord;
  int acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

namespace {

FiniteGroupTable cyclic_table(int k) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
  return FiniteGroupTable("Z" + std::to_string(k), std::move(t));
}

// Dihedral group of the square: index i + 4j for r^i s^j, s r = r^-1 s.
FiniteGroupTable dihedral4_table() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
      int rot = ((i + (j ? -k : k)) % 4 + 4) % 4;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rot + 4 * (j ^ l);
    }
  return FiniteGroupTable("D4", std::move(t));
}

// Quaternion units: index 2*axis + (sign < 0), axes 0:1, 1:i, 2:j, 3:k.
FiniteGroupTable quaternion_table() {
  auto unit_mul = [](int a, int b) -> std::pair<int, int> {  // (sign, axis)
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (a == b) return {-1, 0};
    int axis = 6 - a - b;  // the third of {1,2,3}
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return {forward ? 1 : -1, axis};
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto [sign, axis] = unit_mul(a / 2, b / 2);
      int neg = (a % 2) ^ (b % 2) ^ (sign < 0 ? 1 : 0);
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * axis + neg;
    }
  return FiniteGroupTable("Q8", std::move(t));
}

FiniteGroupTable symmetric_table(int deg) {
  std::vector<int> base(static_cast<std::size_t>(deg));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> probe = base;
  do {
    perms.push_back(probe);
  } while (std::next_permutation(probe.begin(), probe.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(static_cast<std::size_t>(deg));
      for (int x = 0; x < deg; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)]
                 [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(comp);
    }
  return FiniteGroupTable("S" + std::to_string(deg), std::move(t));
}

}  // namespace

FiniteGroupTable make_target(const std::string& name) {
  if ((name[0] == 'Z' || name[0] == 'z') && name.size() > 1) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 1 || k > 16)
      throw Error(ErrorKind::InvalidParam, "cyclic targets range over Z1..Z16, got '" + name + "'");
    return cyclic_table(k);
  }
  if (name == "D4" || name == "d4") return dihedral4_table();
  if (name == "Q8" || name == "q8") return quaternion_table();
  if (name == "S3" || name == "s3") return symmetric_table(3);
  if (name == "S4" || name == "s4") return symmetric_table(4);
  throw Error(ErrorKind::InvalidParam, "unknown target group '" + name + "'");
}

std::vector<FiniteGroupTable> targets_up_to_order(int max_order) {
  std::vector<FiniteGroupTable> out;
  for (int k = 1; k <= 16 && k <= max_order; ++k) out.push_back(cyclic_table(k));
  if (max_order >= 6) out.push_back(symmetric_table(3));
  if (max_order >= 8) out.push_back(dihedral4_table());
  if (max_order >= 8) out.push_back(quaternion_table());
  if (max_order >= 24) out.push_back(symmetric_table(4));
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteGroupTable& a, const FiniteGroupTable& b) {
                     return a.order() < b.order();
                   });
  return out;
}

namespace {

struct IdxLetter {
  int gen;
  long long coeff, cnst;
};

using IdxWord = std::vector<IdxLetter>;

struct HomUnit {
  int depth = -1;  // max generator index referenced; -1 = constant relator
  bool family = false;
  IdxWord word;                    // plain relator
  IdxWord lhs, rhs_in, rhs_notin;  // family branches
  bool conditional = false;
  int shift = -1;  // generator index with symbolic exponent, -1 if none
};

struct HomProblem {
  const FinitePresentation& p;
  const FiniteGroupTable& target;
  std::vector<HomUnit> units;
  std::vector<std::vector<const HomUnit*>> by_depth;
  long long max_bound = 0;

  HomProblem(const FinitePresentation& pres, const FiniteGroupTable& tgt) : p(pres), target(tgt) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < p.gens.size(); ++i) index[p.gens[i]] = static_cast<int>(i);
    auto to_idx = [&](const SymWord& w, int& depth, int& shift) {
      IdxWord out;
      for (const auto& letter : w) {
        int g = index.at(letter.name);
        depth = std::max(depth, g);
        if (letter.coeff != 0) shift = g;
        out.push_back({g, letter.coeff, letter.cnst});
      }
      return out;
    };
    for (const auto& rel : p.relators) {
      HomUnit u;
      int shift = -1;
      u.word = to_idx(rel, u.depth, shift);
      units.push_back(std::move(u));
    }
    for (const auto& fam : p.families) {
      HomUnit u;
      u.family = true;
      u.conditional = fam.conditional;
      u.lhs = to_idx(fam.lhs, u.depth, u.shift);
      u.rhs_in = to_idx(fam.rhs_in, u.depth, u.shift);
      u.rhs_notin = to_idx(fam.rhs_notin, u.depth, u.shift);
      units.push_back(std::move(u));
    }
    by_depth.assign(p.gens.size() + 1, {});
    for (const auto& u : units) by_depth[static_cast<std::size_t>(u.depth + 1)].push_back(&u);
  }

  int eval(const IdxWord& w, const std::vector<int>& img, long long n) const {
    int acc = 0;
    for (const auto& letter : w)
      acc = target.mul(acc, target.power(img[static_cast<std::size_t>(letter.gen)],
                                         letter.coeff * n + letter.cnst));
    return acc;
  }

  bool holds(const HomUnit& u, const std::vector<int>& img, long long* bound_seen) {
    if (!u.family) return eval(u.word, img, 0) == 0;
    long long shift_order =
        u.shift >= 0 ? target.element_order(img[static_cast<std::size_t>(u.shift)]) : 1;
    long long bound = p.family_bound(shift_order);
    if (bound_seen) *bound_seen = std::max(*bound_seen, bound);
    for (long long n = 1; n <= bound; ++n) {
      const IdxWord* rhs = &u.rhs_in;
      if (u.conditional)
        rhs = p.twist_set->beta(static_cast<int>(n)) == 0 ? &u.rhs_in : &u.rhs_notin;
      if (eval(u.lhs, img, n) != eval(*rhs, img, n)) return false;
    }
    return true;
  }
};

long long assignments_or_throw(const FinitePresentation& p, const FiniteGroupTable& target,
                               const Caps& caps) {
  long long total = 1;
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    if (total > caps.hom_budget / target.order())
      throw Error(ErrorKind::BudgetExceeded,
                  "assignment space " + std::to_string(target.order()) + "^" +
                      std::to_string(p.gens.size()) + " exceeds the budget");
    total *= target.order();
  }
  return total;
}

}  // namespace

HomCountReport count_homs(const FinitePresentation& p, const FiniteGroupTable& target,
                          const Caps& caps, unsigned workers) {
  auto start = std::chrono::steady_clock::now();
  assignments_or_throw(p, target, caps);
  HomProblem problem(p, target);
  HomCountReport report;
  report.presentation = p.name;
  report.target = target.name();

  const int g = static_cast<int>(p.gens.size());
  const int ord = target.order();
  for (const HomUnit* u : problem.by_depth[0])
    if (!problem.holds(*u, {}, &problem.max_bound)) {
      report.truncation_bound = problem.max_bound;
      return report;
    }
  if (g == 0) {
    report.count = 1;
  } else {
    auto rec = [&](auto&& self, std::vector<int>& img, int depth, long long* bound) -> long long {
      if (depth == g) return 1;
      long long total = 0;
      for (int v = 0; v < ord; ++v) {
        img[static_cast<std::size_t>(depth)] = v;
        bool ok = true;
        for (const HomUnit* u : problem.by_depth[static_cast<std::size_t>(depth + 1)])
          if (!problem.holds(*u, img, bound)) {
            ok = false;
            break;
          }
        if (ok) total += self(self, img, depth + 1, bound);
      }
      return total;
    };
    std::vector<long long> counts(std::max(1u, workers), 0);
    std::vector<long long> bounds(std::max(1u, workers), 0);
    parallel_chunks(static_cast<std::size_t>(ord), workers,
                    [&](std::size_t lo, std::size_t hi, unsigned w) {
                      std::vector<int> img(static_cast<std::size_t>(g), 0);
                      for (std::size_t v = lo; v < hi; ++v) {
                        img[0] = static_cast<int>(v);
                        bool ok = true;
                        for (const HomUnit* u : problem.by_depth[1])
                          if (!problem.holds(*u, img, &bounds[w])) {
                            ok = false;
                            break;
                          }
                        if (ok) counts[w] += rec(rec, img, 1, &bounds[w]);
                      }
                    });
    for (long long c : counts) report.count += c;
    for (long long b : bounds) problem.max_bound = std::max(problem.max_bound, b);
  }
  report.truncation_bound = problem.max_bound;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

HomCountReport count_homs_naive(const FinitePresentation& p, const FiniteGroupTable& target,
                                const Caps& caps) {
  auto start = std::chrono::steady_clock::now();
  assignments_or_throw(p, target, caps);
  HomProblem problem(p, target);
  HomCountReport report;
  report.presentation = p.name;
  report.target = target.name();

  const int g = static_cast<int>(p.gens.size());
  const int ord = target.order();
  std::vector<int> img(static_cast<std::size_t>(g), 0);
  while (true) {
    bool ok = true;
    for (const HomUnit& u : problem.units)
      if (!problem.holds(u, img, &problem.max_bound)) {
        ok = false;
        break;
      }
    if (ok) ++report.count;
    int pos = g - 1;
    while (pos >= 0 && img[static_cast<std::size_t>(pos)] == ord - 1) {
      img[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++img[static_cast<std::size_t>(pos)];
  }
  report.truncation_bound = problem.max_bound;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string SeparationVerdict::text() const {
  if (!separated) return "no separating target found";
  return "separated by " + target + ": " + std::to_string(count_a) + " vs " +
         std::to_string(count_b) + " homomorphisms";
}

SeparationVerdict separate(const FinitePresentation& a, const FinitePresentation& b,
                           const std::vector<FiniteGroupTable>& targets, const Caps& caps) {
  SeparationVerdict verdict;
  for (const auto& target : targets) {
    HomCountReport ra = count_homs(a, target, caps);
    HomCountReport rb = count_homs(b, target, caps);
    if (ra.count != rb.count) {
      verdict.separated = true;
      verdict.target = target.name();
      verdict.count_a = ra.count;
      verdict.count_b = rb.count;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace medianlab
