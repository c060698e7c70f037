#include <cctype>
#include <map>

#include "chd/families.hpp"

namespace chd {

namespace {

const std::map<FamilyKind, std::string>& kind_names() {
  static const std::map<FamilyKind, std::string> names = {
      {FamilyKind::T, "T"},
      {FamilyKind::K, "K"},
      {FamilyKind::CP, "CP"},
      {FamilyKind::C, "C"},
      {FamilyKind::X_undirected, "X_undirected"},
      {FamilyKind::X_lambda_T, "X_lambda_T"},
      {FamilyKind::DL, "DL"},
      {FamilyKind::M, "M"},
      {FamilyKind::Mprime, "Mprime"},
      {FamilyKind::tournament, "tournament"},
      {FamilyKind::generic_bipartite, "generic_bipartite"},
      {FamilyKind::line_of, "line_of"},
  };
  return names;
}

const std::map<TournamentKind, std::string>& tournament_names() {
  static const std::map<TournamentKind, std::string> names = {
      {TournamentKind::trivial, "trivial"},
      {TournamentKind::triangle, "triangle"},
      {TournamentKind::linear, "linear"},
      {TournamentKind::circular_P, "circular_P"},
      {TournamentKind::paley_generic, "paley_generic"},
  };
  return names;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

void require(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) throw Error("invalid parameters for " + to_string(spec.kind) + ": " + what);
}

bool bipartite_kind(FamilyKind kind) {
  return kind == FamilyKind::T || kind == FamilyKind::K || kind == FamilyKind::CP ||
         kind == FamilyKind::C || kind == FamilyKind::generic_bipartite;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    spec.validate();
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("cannot parse family spec '" + text_ + "' at offset " + std::to_string(pos_) +
                ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '\'')) {
      ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    try {
      return std::stoull(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }

  static FamilyKind kind_from(const std::string& name, bool& ok) {
    for (const auto& [kind, text] : kind_names()) {
      if (text == name) {
        ok = true;
        return kind;
      }
    }
    if (name == "Mp" || name == "M'") {
      ok = true;
      return FamilyKind::Mprime;
    }
    ok = false;
    return FamilyKind::C;
  }

  FamilySpec parse_spec() {
    std::string name = identifier();
    bool ok = false;
    FamilySpec spec;
    spec.kind = kind_from(name, ok);
    if (!ok) fail("unknown spec kind '" + name + "'");
    expect('(');
    if (accept(')')) return spec;
    do {
      std::size_t save = pos_;
      std::string key = identifier();
      if (!accept('=')) {
        pos_ = save;
        if (spec.inner) fail("more than one nested spec");
        spec.inner = std::make_shared<const FamilySpec>(parse_spec());
        continue;
      }
      if (key == "kind") {
        std::string value = identifier();
        bool found = false;
        for (const auto& [kind, text] : tournament_names()) {
          if (text == value) {
            spec.tournament_kind = kind;
            found = true;
          }
        }
        if (!found) fail("unknown tournament kind '" + value + "'");
      } else if (key == "T" || key == "inner" || key == "delta") {
        if (spec.inner) fail("more than one nested spec");
        spec.inner = std::make_shared<const FamilySpec>(parse_spec());
      } else {
        std::uint64_t value = number();
        if (key == "kappa") {
          spec.kappa = value;
        } else if (key == "lambda") {
          spec.lambda = value;
        } else if (key == "m") {
          spec.m = value;
        } else if (key == "n") {
          spec.n = value;
        } else if (key == "t") {
          spec.t = value;
        } else if (key == "seed") {
          spec.seed = value;
        } else if (key == "r" || key == "radius") {
          spec.radius = value;
        } else {
          fail("unknown parameter '" + key + "'");
        }
      }
    } while (accept(','));
    expect(')');
    return spec;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(FamilyKind kind) { return kind_names().at(kind); }
std::string to_string(TournamentKind kind) { return tournament_names().at(kind); }

bool operator==(const FamilySpec& a, const FamilySpec& b) { return to_string(a) == to_string(b); }

bool FamilySpec::finite() const {
  switch (kind) {
    case FamilyKind::K:
    case FamilyKind::CP:
    case FamilyKind::C:
    case FamilyKind::tournament:
    case FamilyKind::generic_bipartite:
      return true;
    case FamilyKind::line_of:
      return inner && inner->finite();
    default:
      return false;
  }
}

void FamilySpec::validate() const {
  const FamilySpec& s = *this;
  auto needs_radius = [&] { require(radius >= 1, s, "radius must be at least 1"); };
  switch (kind) {
    case FamilyKind::T:
      require(kappa >= 1 && lambda >= 1, s, "kappa, lambda >= 1");
      needs_radius();
      break;
    case FamilyKind::K:
      require(kappa >= 1 && lambda >= 1, s, "kappa, lambda >= 1");
      break;
    case FamilyKind::CP:
      require(kappa >= 1, s, "kappa >= 1");
      break;
    case FamilyKind::C:
      require(m >= 2, s, "m >= 2");
      break;
    case FamilyKind::X_undirected:
      require(kappa >= 2 && lambda >= 2, s, "kappa, lambda >= 2");
      needs_radius();
      break;
    case FamilyKind::X_lambda_T:
      require(inner && inner->kind == FamilyKind::tournament, s, "needs a tournament");
      inner->validate();
      require(lambda >= 2, s, "lambda >= 2");
      needs_radius();
      break;
    case FamilyKind::DL:
      require(inner && bipartite_kind(inner->kind), s, "delta not bipartite-oriented");
      if (inner->kind == FamilyKind::T) {
        require(inner->kappa >= 1 && inner->lambda >= 1, s, "kappa, lambda >= 1");
      } else {
        inner->validate();
      }
      needs_radius();
      break;
    case FamilyKind::M:
      require(kappa >= 3, s, "kappa >= 3");
      require(m >= 2, s, "m >= 2");
      needs_radius();
      break;
    case FamilyKind::Mprime:
      require(m >= 2, s, "m >= 2");
      needs_radius();
      break;
    case FamilyKind::tournament:
      switch (tournament_kind) {
        case TournamentKind::trivial:
        case TournamentKind::triangle:
          break;
        case TournamentKind::linear:
          require(n >= 1, s, "n >= 1");
          break;
        case TournamentKind::circular_P:
          require(n >= 1 && n % 2 == 1, s, "n odd");
          break;
        case TournamentKind::paley_generic:
          require(is_prime(n) && n % 4 == 3, s, "n prime with n = 3 mod 4");
          break;
      }
      break;
    case FamilyKind::generic_bipartite:
      require(n >= 1, s, "n >= 1");
      require(t >= 1 && t <= 3, s, "1 <= t <= 3");
      break;
    case FamilyKind::line_of:
      require(inner != nullptr, s, "needs an inner spec");
      inner->validate();
      if (!inner->finite()) require(inner->radius >= 3, s, "inner radius >= 3");
      break;
  }
}

std::string to_string(const FamilySpec& spec) {
  std::string out = to_string(spec.kind) + "(";
  bool first = true;
  auto add = [&](const std::string& item) {
    if (!first) out += ",";
    out += item;
    first = false;
  };
  auto num = [&](const char* key, std::uint64_t value) {
    add(std::string(key) + "=" + std::to_string(value));
  };
  switch (spec.kind) {
    case FamilyKind::T:
    case FamilyKind::X_undirected:
      num("kappa", spec.kappa);
      num("lambda", spec.lambda);
      num("r", spec.radius);
      break;
    case FamilyKind::K:
      num("kappa", spec.kappa);
      num("lambda", spec.lambda);
      break;
    case FamilyKind::CP:
      num("kappa", spec.kappa);
      break;
    case FamilyKind::C:
      num("m", spec.m);
      break;
    case FamilyKind::X_lambda_T:
      if (spec.inner) add(to_string(*spec.inner));
      num("lambda", spec.lambda);
      num("r", spec.radius);
      break;
    case FamilyKind::DL:
      if (spec.inner) add(to_string(*spec.inner));
      num("r", spec.radius);
      break;
    case FamilyKind::M:
      num("kappa", spec.kappa);
      num("m", spec.m);
      num("r", spec.radius);
      break;
    case FamilyKind::Mprime:
      num("m", spec.m);
      num("r", spec.radius);
      break;
    case FamilyKind::tournament:
      add("kind=" + to_string(spec.tournament_kind));
      if (spec.tournament_kind != TournamentKind::trivial &&
          spec.tournament_kind != TournamentKind::triangle) {
        num("n", spec.n);
      }
      break;
    case FamilyKind::generic_bipartite:
      num("n", spec.n);
      num("t", spec.t);
      num("seed", spec.seed);
      break;
    case FamilyKind::line_of:
      if (spec.inner) add(to_string(*spec.inner));
      break;
  }
  return out + ")";
}

FamilySpec parse_family_spec(const std::string& text) { return Parser(text).parse(); }

}  // namespace chd
