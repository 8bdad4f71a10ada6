#include "cdl/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace cdl::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    line = trim(line.substr(0, line.find('#')));
    if (!line.empty()) out.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<Rat> parse_list(std::string_view v) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
    throw DomainError("expected a bracketed list like [1/2, 1], got '" + std::string(v) + "'");
  }
  std::vector<Rat> out;
  std::string_view body = trim(v.substr(1, v.size() - 2));
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    out.push_back(Rat::parse(trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// name(arg) or name(key=arg); returns arg.
std::string_view call_argument(std::string_view v, std::string_view name, std::string_view key) {
  if (v.size() <= name.size() + 1 || v.substr(0, name.size()) != name || v[name.size()] != '(' || v.back() != ')') {
    return {};
  }
  std::string_view arg = trim(v.substr(name.size() + 1, v.size() - name.size() - 2));
  if (!key.empty()) {
    const auto eq = arg.find('=');
    if (eq != std::string_view::npos) {
      if (trim(arg.substr(0, eq)) != key) throw DomainError("expected '" + std::string(key) + "=' in '" + std::string(v) + "'");
      arg = trim(arg.substr(eq + 1));
    }
  }
  if (arg.empty()) throw DomainError("empty argument in '" + std::string(v) + "'");
  return arg;
}

TailRule parse_tail(std::string_view v) {
  if (v == "ones") return TailRule::ones();
  if (auto a = call_argument(v, "const", "value"); !a.empty()) return TailRule::constant(Rat::parse(a));
  if (auto a = call_argument(v, "inv_xi", "w2sq"); !a.empty()) {
    TailRule t = TailRule::xi(Rat::parse(a));
    t.reciprocal = true;
    return t;
  }
  if (auto a = call_argument(v, "xi", "w2sq"); !a.empty()) return TailRule::xi(Rat::parse(a));
  throw DomainError("unknown tail rule '" + std::string(v) + "' (expected ones, const(v), xi(w2sq=v), inv_xi(w2sq=v))");
}

}  // namespace

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SquaredWeights parse_weight_spec(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  for (std::string_view line : content_lines(text)) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected 'key = value', got '" + std::string(line) + "'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) throw DomainError("expected 'key = value', got '" + std::string(line) + "'");
    if (!kv.emplace(key, value).second) throw DomainError("duplicate key '" + key + "'");
  }
  const auto kind = kv.find("kind");
  if (kind == kv.end()) throw DomainError("weight spec needs 'kind = explicit | family'");
  if (kind->second == "family") {
    for (const auto& [k, _] : kv)
      if (k != "kind" && k != "x") throw DomainError("unexpected key '" + k + "' for kind = family");
    const auto x = kv.find("x");
    if (x == kv.end()) throw DomainError("kind = family needs 'x = <rational>'");
    return family::family_weights(family::FamilyParam(Rat::parse(x->second)));
  }
  if (kind->second != "explicit") throw DomainError("unknown kind '" + kind->second + "'");
  for (const auto& [k, _] : kv)
    if (k != "kind" && k != "sq" && k != "tail") throw DomainError("unexpected key '" + k + "' for kind = explicit");
  const auto sq = kv.find("sq");
  if (sq == kv.end()) throw DomainError("kind = explicit needs 'sq = [...]'");
  const auto tail = kv.find("tail");
  return SquaredWeights(parse_list(sq->second), tail == kv.end() ? TailRule::ones() : parse_tail(tail->second));
}

SquaredWeights read_weight_spec(const std::string& path) { return parse_weight_spec(slurp(path)); }

std::string format_weight_spec(const SquaredWeights& w) {
  std::ostringstream os;
  os << "kind = explicit\nsq = [";
  for (std::size_t i = 0; i < w.head().size(); ++i) os << (i ? ", " : "") << w.head()[i].str();
  os << "]\ntail = ";
  const TailRule& t = w.tail();
  if (t.kind == TailRule::Kind::constant) {
    const Rat v = t.reciprocal ? t.value.inverse() : t.value;
    if (v == Rat(1)) os << "ones";
    else os << "const(" << v.str() << ")";
  } else {
    os << (t.reciprocal ? "inv_xi" : "xi") << "(w2sq=" << t.value.str() << ")";
  }
  os << "\n";
  return os.str();
}

ExactSequence parse_sequence(std::string_view text) {
  std::vector<Rat> values;
  for (std::string_view line : content_lines(text)) values.push_back(Rat::parse(line));
  if (values.empty()) throw DomainError("sequence file holds no values");
  VectorX<Rat> v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return ExactSequence(std::move(v));
}

ExactSequence read_sequence(const std::string& path) { return parse_sequence(slurp(path)); }

void write_figure_csv(std::ostream& os, const family::FigureTable& table, bool exact) {
  os << "x";
  for (std::size_t m : table.ms) os << ",D" << m;
  os << "\n";
  auto render = [exact](const Rat& v) { return exact ? v.str() : to_decimal(v, 12); };
  for (std::size_t k = 0; k < table.xs.size(); ++k) {
    os << render(table.xs[k]);
    for (const auto& v : table.values[k]) os << "," << render(v);
    os << "\n";
  }
}

}  // namespace cdl::io
