#include <algorithm>

#include "confkit/regex.hpp"

namespace confkit {

Regex Regex::empty() { return Regex(Kind::Empty, {}, {}); }

Regex Regex::epsilon() { return Regex(Kind::Epsilon, {}, {}); }

Regex Regex::symbol(std::string name) {
  if (name.empty()) throw Error("empty symbol name");
  return Regex(Kind::Symbol, std::move(name), {});
}

Regex Regex::concat(std::vector<Regex> parts) {
  std::vector<Regex> flat;
  for (auto& p : parts) {
    switch (p.kind_) {
      case Kind::Empty:
        return empty();
      case Kind::Epsilon:
        break;
      case Kind::Concat:
        for (auto& c : p.children_) flat.push_back(std::move(c));
        break;
      default:
        flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return epsilon();
  if (flat.size() == 1) return std::move(flat.front());
  return Regex(Kind::Concat, {}, std::move(flat));
}

Regex Regex::alt(std::vector<Regex> options) {
  std::vector<Regex> flat;
  auto add = [&](Regex r) {
    if (std::find(flat.begin(), flat.end(), r) == flat.end()) flat.push_back(std::move(r));
  };
  for (auto& o : options) {
    if (o.kind_ == Kind::Empty) continue;
    if (o.kind_ == Kind::Alt) {
      for (auto& c : o.children_) add(std::move(c));
    } else {
      add(std::move(o));
    }
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return std::move(flat.front());
  return Regex(Kind::Alt, {}, std::move(flat));
}

Regex Regex::star(Regex inner) {
  if (inner.kind_ == Kind::Star) return inner;
  if (inner.kind_ == Kind::Empty || inner.kind_ == Kind::Epsilon) return epsilon();
  return Regex(Kind::Star, {}, {std::move(inner)});
}

namespace {

bool needs_quotes(const std::string& name) {
  if (name.size() != 1) return true;
  const char c = name.front();
  return c == '|' || c == '*' || c == '(' || c == ')' || c == '\'';
}

}  // namespace

std::string Regex::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "∅";
    case Kind::Epsilon:
      return "ε";
    case Kind::Symbol:
      return needs_quotes(name_) ? "'" + name_ + "'" : name_;
    case Kind::Star: {
      const auto& inner = children_.front();
      const bool group = inner.kind_ == Kind::Concat || inner.kind_ == Kind::Alt;
      return (group ? "(" + inner.to_string() + ")" : inner.to_string()) + "*";
    }
    case Kind::Concat: {
      std::string out;
      for (const auto& c : children_) {
        out += c.kind_ == Kind::Alt ? "(" + c.to_string() + ")" : c.to_string();
      }
      return out;
    }
    case Kind::Alt: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i != 0) out += '|';
        out += children_[i].to_string();
      }
      return out;
    }
  }
  return {};
}

Regex kleene_closure(const std::vector<std::string>& alphabet) {
  std::vector<Regex> symbols;
  symbols.reserve(alphabet.size());
  for (const auto& s : alphabet) symbols.push_back(Regex::symbol(s));
  return Regex::star(Regex::alt(std::move(symbols)));
}

}  // namespace confkit
