#include "wspd/pair_decomposition.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wspd/error.hpp"

namespace wspd {

namespace {

void write_indices(std::ostream& out, const std::vector<std::size_t>& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out << ',';
    out << s[k];
  }
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t lineno) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad index list '" + text + "'", lineno);
    }
    out.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::size_t parse_index(const std::string& text, std::size_t lineno) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("bad index '" + text + "'", lineno);
  }
  return std::stoull(text);
}

int parse_int(const std::string& text, std::size_t lineno) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError("bad integer '" + text + "'", lineno);
}

}  // namespace

std::string format_pair(const WspdPair& p, const FiniteMetric& m) {
  std::ostringstream out;
  out.precision(17);
  out << "A:";
  write_indices(out, p.a);
  out << " B:";
  write_indices(out, p.b);
  out << " repA:" << p.rep_a << " repB:" << p.rep_b << " dist:" << m(p.rep_a, p.rep_b);
  switch (p.origin) {
    case PairOrigin::kQuadtree:
      break;
    case PairOrigin::kLevel:
      out << " level:" << p.level;
      break;
    case PairOrigin::kUdgShort:
      out << " regime:short";
      break;
    case PairOrigin::kUdgLevel:
      out << " regime:level-" << p.level;
      break;
  }
  return out.str();
}

void write_pairs(std::ostream& out, const PairDecomposition& w, const FiniteMetric& m) {
  for (const auto& p : w.pairs) {
    out << format_pair(p, m) << '\n';
  }
}

void save_pairs(const std::string& path, const PairDecomposition& w, const FiniteMetric& m) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write " + path);
  }
  write_pairs(out, w, m);
}

PairDecomposition read_pairs(std::istream& in) {
  PairDecomposition w;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    WspdPair p;
    bool has_a = false, has_b = false, has_ra = false, has_rb = false;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw ParseError("expected key:value, found '" + tok + "'", lineno);
      }
      const std::string key = tok.substr(0, colon);
      const std::string value = tok.substr(colon + 1);
      if (key == "A") {
        p.a = parse_indices(value, lineno);
        has_a = true;
      } else if (key == "B") {
        p.b = parse_indices(value, lineno);
        has_b = true;
      } else if (key == "repA") {
        p.rep_a = parse_index(value, lineno);
        has_ra = true;
      } else if (key == "repB") {
        p.rep_b = parse_index(value, lineno);
        has_rb = true;
      } else if (key == "level") {
        p.origin = PairOrigin::kLevel;
        p.level = parse_int(value, lineno);
      } else if (key == "regime") {
        if (value == "short") {
          p.origin = PairOrigin::kUdgShort;
        } else if (value.rfind("level-", 0) == 0) {
          p.origin = PairOrigin::kUdgLevel;
          p.level = parse_int(value.substr(6), lineno);
        } else {
          throw ParseError("unknown regime '" + value + "'", lineno);
        }
      } else if (key != "dist") {
        throw ParseError("unknown field '" + key + "'", lineno);
      }
    }
    if (!has_a || !has_b) {
      throw ParseError("pair line needs both A: and B:", lineno);
    }
    if (!has_ra) p.rep_a = p.a.front();
    if (!has_rb) p.rep_b = p.b.front();
    w.pairs.push_back(std::move(p));
  }
  return w;
}

PairDecomposition load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  return read_pairs(in);
}

}  // namespace wspd
