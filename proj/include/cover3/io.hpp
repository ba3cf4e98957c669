// Instance file formats: points, ranges, graphs, hypergraphs. Text-based,
// exact rationals, canonical round-trip.
#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/graphs.hpp"
#include "cover3/reductions.hpp"

namespace cover3 {

inline Error parse_error(int line, const std::string& what) {
  return Error(Error::Code::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Accepts "p", "p/q", and decimal forms like "-1.25"; canonical form is p or p/q.
inline Rational parse_rational(const std::string& tok, int line = 0) {
  if (tok.empty()) throw parse_error(line, "empty rational token");
  auto slash = tok.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(tok.substr(0, slash));
      BigInt den(tok.substr(slash + 1));
      return Rational(num, den);
    }
    auto dot = tok.find('.');
    if (dot != std::string::npos) {
      std::string ip = tok.substr(0, dot), fp = tok.substr(dot + 1);
      bool neg = !ip.empty() && ip[0] == '-';
      if (ip == "-" || ip.empty()) ip = neg ? "-0" : "0";
      BigInt num(ip);
      BigInt den = 1;
      for (char ch : fp) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw parse_error(line, "bad decimal");
        num = num * 10 + (neg ? -(ch - '0') : (ch - '0'));
        den *= 10;
      }
      return Rational(num, den);
    }
    return Rational(BigInt(tok), 1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error(line, "bad rational '" + tok + "'");
  }
}

inline ExtScalar parse_ext_scalar(const std::string& tok, int line = 0) {
  if (tok == "-inf") return ExtScalar::neg_inf();
  if (tok == "inf" || tok == "+inf") return ExtScalar::pos_inf();
  return ExtScalar(parse_rational(tok, line));
}

// Interval token: ['('] lo ':' hi [')'] — a leading '(' opens the low side, a
// trailing ')' opens the high side; infinite sides are always open.
inline Interval parse_interval(std::string tok, int line = 0) {
  bool lo_open = false, hi_open = false;
  if (!tok.empty() && tok.front() == '(') {
    lo_open = true;
    tok.erase(tok.begin());
  }
  if (!tok.empty() && tok.back() == ')') {
    hi_open = true;
    tok.pop_back();
  }
  auto colon = tok.find(':');
  if (colon == std::string::npos) throw parse_error(line, "interval token missing ':'");
  ExtScalar lo = parse_ext_scalar(tok.substr(0, colon), line);
  ExtScalar hi = parse_ext_scalar(tok.substr(colon + 1), line);
  Interval iv(lo, hi, !lo_open, !hi_open);
  if (!iv.valid()) throw parse_error(line, "empty interval '" + tok + "'");
  return iv;
}

inline std::string print_interval(const Interval& s) {
  std::string out;
  if (s.lo.is_finite() && !s.lo_closed) out += "(";
  out += s.lo.str() + ":" + s.hi.str();
  if (s.hi.is_finite() && !s.hi_closed) out += ")";
  return out;
}

enum class FileKind { Points, Ranges, Graph, Hypergraph };

struct InstanceFile {
  FileKind kind = FileKind::Points;
  int dim = 2;
  bool weighted = false;
  bool ext_sqrt39 = false;

  std::vector<PointD> points;
  std::vector<Point39> ext_points;
  std::vector<ExtRect> ranges;
  WeightedGraph graph;
  PartiteHypergraph3 hypergraph;
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

inline InstanceFile parse_instance(std::istream& in) {
  InstanceFile f;
  std::string line;
  int ln = 0;
  auto next_tokens = [&](bool required) {
    while (std::getline(in, line)) {
      ++ln;
      auto toks = detail::tokens_of(line);
      if (!toks.empty() && toks[0][0] != '#') return toks;
    }
    if (required) throw parse_error(ln, "unexpected end of file");
    return std::vector<std::string>{};
  };

  auto header = next_tokens(true);
  if (header.size() < 4 || header[0] != "DIM" || header[2] != "KIND")
    throw parse_error(ln, "expected header 'DIM d KIND kind'");
  f.dim = std::stoi(header[1]);
  std::string kind = header[3];
  for (std::size_t i = 4; i < header.size(); ++i) {
    if (header[i] == "WEIGHTED")
      f.weighted = true;
    else if (header[i] == "EXT" && i + 1 < header.size() && header[i + 1] == "sqrt39") {
      f.ext_sqrt39 = true;
      ++i;
    } else
      throw parse_error(ln, "unknown header token '" + header[i] + "'");
  }

  if (kind == "points") {
    f.kind = FileKind::Points;
    for (auto toks = next_tokens(false); !toks.empty(); toks = next_tokens(false)) {
      if (f.ext_sqrt39) {
        if (static_cast<int>(toks.size()) != 2 * f.dim)
          throw parse_error(ln, "expected 2*dim rationals per extended point");
        Point39 p(f.dim);
        for (int d = 0; d < f.dim; ++d)
          p[d] = Ext39(parse_rational(toks[2 * d], ln), parse_rational(toks[2 * d + 1], ln));
        f.ext_points.push_back(std::move(p));
      } else {
        if (static_cast<int>(toks.size()) != f.dim)
          throw parse_error(ln, "expected dim rationals per point");
        PointD p;
        for (auto& t : toks) p.coords.push_back(parse_rational(t, ln));
        f.points.push_back(std::move(p));
      }
    }
  } else if (kind == "ranges") {
    f.kind = FileKind::Ranges;
    int id = 0;
    for (auto toks = next_tokens(false); !toks.empty(); toks = next_tokens(false)) {
      bool has_w = static_cast<int>(toks.size()) == f.dim + 1;
      if (!has_w && static_cast<int>(toks.size()) != f.dim)
        throw parse_error(ln, "expected dim interval tokens (plus optional weight)");
      if (has_w != f.weighted) throw parse_error(ln, "weight presence must match the WEIGHTED header");
      ExtRect r;
      for (int d = 0; d < f.dim; ++d) r.sides.push_back(parse_interval(toks[d], ln));
      if (has_w) r.weight = parse_rational(toks[f.dim], ln);
      r.id = id++;
      f.ranges.push_back(std::move(r));
    }
  } else if (kind == "graph") {
    f.kind = FileKind::Graph;
    auto nm = next_tokens(true);
    if (nm.size() != 2) throw parse_error(ln, "expected 'n m'");
    int n = std::stoi(nm[0]), m = std::stoi(nm[1]);
    auto labels = next_tokens(true);
    if (static_cast<int>(labels.size()) != n) throw parse_error(ln, "expected n vertex labels");
    for (auto& t : labels) f.graph.labels.push_back(parse_rational(t, ln));
    for (int e = 0; e < m; ++e) {
      auto toks = next_tokens(true);
      if (toks.size() != 2 && toks.size() != 3) throw parse_error(ln, "expected 'u v [w]'");
      Rational u = parse_rational(toks[0], ln), v = parse_rational(toks[1], ln);
      auto find = [&](const Rational& x) {
        for (int i = 0; i < f.graph.n(); ++i)
          if (f.graph.labels[i] == x) return i;
        throw parse_error(ln, "edge endpoint is not a vertex label");
      };
      GraphEdge ge{find(u), find(v), std::nullopt};
      if (toks.size() == 3) ge.w = parse_rational(toks[2], ln);
      if (ge.w.has_value() != f.weighted)
        throw parse_error(ln, "edge weight presence must match the WEIGHTED header");
      f.graph.edges.push_back(ge);
    }
  } else if (kind == "hypergraph") {
    f.kind = FileKind::Hypergraph;
    auto ph = next_tokens(true);
    if (ph.size() != 2 || ph[0] != "parts") throw parse_error(ln, "expected 'parts k'");
    int k = std::stoi(ph[1]);
    for (int p = 0; p < k; ++p) {
      auto toks = next_tokens(true);
      std::vector<Rational> labels;
      for (auto& t : toks) labels.push_back(parse_rational(t, ln));
      f.hypergraph.parts.push_back(std::move(labels));
    }
    auto em = next_tokens(true);
    if (em.size() != 1) throw parse_error(ln, "expected edge count");
    int m = std::stoi(em[0]);
    for (int e = 0; e < m; ++e) {
      auto toks = next_tokens(true);
      if (toks.size() != 3) throw parse_error(ln, "expected three part:index tokens");
      HyperEdge he;
      for (int t = 0; t < 3; ++t) {
        auto colon = toks[t].find(':');
        if (colon == std::string::npos) throw parse_error(ln, "expected part:index");
        int part = std::stoi(toks[t].substr(0, colon)) - 1;
        int idx = std::stoi(toks[t].substr(colon + 1)) - 1;
        he.ends[t] = {part, idx};
      }
      f.hypergraph.edges.push_back(he);
    }
    f.hypergraph.validate();
  } else {
    throw parse_error(ln, "unknown kind '" + kind + "'");
  }
  return f;
}

inline InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Code::ParseError, "cannot open '" + path + "'");
  return parse_instance(in);
}

inline std::string print_instance(const InstanceFile& f) {
  std::ostringstream out;
  out << "DIM " << f.dim << " KIND ";
  switch (f.kind) {
    case FileKind::Points:
      out << "points";
      if (f.ext_sqrt39) out << " EXT sqrt39";
      out << "\n";
      if (f.ext_sqrt39) {
        for (const auto& p : f.ext_points) {
          for (int d = 0; d < f.dim; ++d)
            out << (d ? " " : "") << p[d].a.str() << " " << p[d].b.str();
          out << "\n";
        }
      } else {
        for (const auto& p : f.points) {
          for (int d = 0; d < f.dim; ++d) out << (d ? " " : "") << p[d].str();
          out << "\n";
        }
      }
      break;
    case FileKind::Ranges:
      out << "ranges";
      if (f.weighted) out << " WEIGHTED";
      out << "\n";
      for (const auto& r : f.ranges) {
        for (int d = 0; d < f.dim; ++d) out << (d ? " " : "") << print_interval(r.sides[d]);
        if (r.weight) out << " " << r.weight->str();
        out << "\n";
      }
      break;
    case FileKind::Graph: {
      out << "graph";
      if (f.weighted) out << " WEIGHTED";
      out << "\n";
      out << f.graph.n() << " " << f.graph.m() << "\n";
      for (int i = 0; i < f.graph.n(); ++i) out << (i ? " " : "") << f.graph.labels[i].str();
      out << "\n";
      for (const auto& e : f.graph.edges) {
        out << f.graph.labels[e.u].str() << " " << f.graph.labels[e.v].str();
        if (e.w) out << " " << e.w->str();
        out << "\n";
      }
      break;
    }
    case FileKind::Hypergraph: {
      out << "hypergraph\n";
      out << "parts " << f.hypergraph.num_parts() << "\n";
      for (const auto& part : f.hypergraph.parts) {
        for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i].str();
        out << "\n";
      }
      out << f.hypergraph.edges.size() << "\n";
      for (const auto& e : f.hypergraph.edges) {
        for (int t = 0; t < 3; ++t)
          out << (t ? " " : "") << (e.ends[t].first + 1) << ":" << (e.ends[t].second + 1);
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

inline void write_instance_file(const std::string& path, const InstanceFile& f) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Code::ParseError, "cannot write '" + path + "'");
  out << print_instance(f);
}

// Instance-file view of a generated reduction instance.
inline InstanceFile points_file_of(const ReductionInstance& inst) {
  InstanceFile f;
  f.kind = FileKind::Points;
  if (inst.kind == ReductionKind::HypercliqueDkc) {
    f.ext_sqrt39 = true;
    f.dim = 7 * inst.kappa;
    f.ext_points = inst.ext_points;
  } else {
    f.dim = inst.points.empty() ? 2 : static_cast<int>(inst.points.front().dim());
    f.points = inst.points;
  }
  return f;
}

inline InstanceFile ranges_file_of(const ReductionInstance& inst) {
  InstanceFile f;
  f.kind = FileKind::Ranges;
  f.dim = inst.ranges.empty() ? 2 : static_cast<int>(inst.ranges.front().dim());
  f.weighted = !inst.ranges.empty() && inst.ranges.front().weight.has_value();
  f.ranges = inst.ranges;
  return f;
}

}  // namespace cover3
