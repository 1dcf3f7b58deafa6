#include <algorithm>

#include "confkit/regex.hpp"

namespace confkit {

namespace {

std::strong_ordering compare(const Regex& a, const Regex& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& x = a.children();
  const auto& y = b.children();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = compare(x[i], y[i]); c != 0) return c;
  }
  return x.size() <=> y.size();
}

/// Alternation with options flattened, sorted and deduplicated.
Regex canonical_alt(std::vector<Regex> options) {
  std::vector<Regex> flat;
  for (auto& o : options) {
    if (o.kind() == Regex::Kind::Alt) {
      flat.insert(flat.end(), o.children().begin(), o.children().end());
    } else if (o.kind() != Regex::Kind::Empty) {
      flat.push_back(std::move(o));
    }
  }
  std::sort(flat.begin(), flat.end(), [](const Regex& a, const Regex& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  return Regex::alt(std::move(flat));
}

}  // namespace

bool nullable(const Regex& regex) {
  switch (regex.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Symbol:
      return false;
    case Regex::Kind::Epsilon:
    case Regex::Kind::Star:
      return true;
    case Regex::Kind::Concat:
      return std::all_of(regex.children().begin(), regex.children().end(),
                         [](const Regex& c) { return nullable(c); });
    case Regex::Kind::Alt:
      return std::any_of(regex.children().begin(), regex.children().end(),
                         [](const Regex& c) { return nullable(c); });
  }
  return false;
}

Regex derivative(const Regex& regex, std::string_view symbol) {
  switch (regex.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
      return Regex::empty();
    case Regex::Kind::Symbol:
      return regex.name() == symbol ? Regex::epsilon() : Regex::empty();
    case Regex::Kind::Star:
      return Regex::concat({derivative(regex.children().front(), symbol), regex});
    case Regex::Kind::Alt: {
      std::vector<Regex> options;
      for (const auto& c : regex.children()) options.push_back(derivative(c, symbol));
      return canonical_alt(std::move(options));
    }
    case Regex::Kind::Concat: {
      // d(r1 r2 ... rn) = d(r1) r2...rn  |  d(r2...rn) when r1 is nullable
      const auto& parts = regex.children();
      std::vector<Regex> options;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Regex> seq{derivative(parts[i], symbol)};
        seq.insert(seq.end(), parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts.end());
        options.push_back(Regex::concat(std::move(seq)));
        if (!nullable(parts[i])) break;
      }
      return canonical_alt(std::move(options));
    }
  }
  return Regex::empty();
}

bool regex_matches(const Regex& regex, const Word& word) {
  Regex current = regex;
  for (const auto& symbol : word) {
    current = derivative(current, symbol);
    if (current.kind() == Regex::Kind::Empty) return false;
  }
  return nullable(current);
}

}  // namespace confkit
