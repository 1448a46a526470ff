#include "rgminor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "rgminor/errors.hpp"

namespace rgminor {

namespace {

bool next_content_line(std::istream &in, std::string &line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos)
      return true;
  }
  return false;
}

bool fully_read(std::istringstream &row) {
  row >> std::ws;
  return row.eof();
}

std::ifstream open_in(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in)
    throw IoError("cannot open " + file.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path &file) {
  std::ofstream out(file, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + file.string() + " for writing");
  return out;
}

} // namespace

void write_graph(std::ostream &out, const Graph &g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream &in) {
  std::string line;
  if (!next_content_line(in, line))
    throw ParseError("graph file is empty");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || !fully_read(header) || n < 0 || m < 0)
    throw ParseError("graph header must be \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw ParseError("graph file ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || !fully_read(row) || u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("bad edge line: " + line);
    if (u >= v)
      throw ParseError("edge lines must have u < v: " + line);
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!edges.empty() && !(edges.back() < e))
      throw ParseError("edges must be sorted and distinct: " + line);
    edges.push_back(e);
  }
  if (next_content_line(in, line))
    throw ParseError("trailing content after edge list");
  return Graph::from_sorted_edges(static_cast<std::size_t>(n), edges);
}

void write_certificate(std::ostream &out, const MinorCertificate &cert, std::size_t vertex_count) {
  out << cert.order() << ' ' << vertex_count << '\n';
  std::vector<Vertex> sorted;
  for (const auto &set : cert.branch_sets) {
    sorted.assign(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      out << (i ? " " : "") << sorted[i];
    out << '\n';
  }
}

CertificateFile read_certificate(std::istream &in) {
  std::string line;
  if (!next_content_line(in, line))
    throw ParseError("certificate file is empty");
  std::istringstream header(line);
  long long order = -1;
  long long n = -1;
  if (!(header >> order >> n) || !fully_read(header) || order < 0 || n < 0)
    throw ParseError("certificate header must be \"order n\"");
  CertificateFile file;
  file.vertex_count = static_cast<std::size_t>(n);
  for (long long i = 0; i < order; ++i) {
    // branch sets are never empty in files we write, but an empty line is
    // still a set; only end-of-file is an error here
    if (!std::getline(in, line))
      throw ParseError("certificate ends after " + std::to_string(i) + " branch sets");
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream row(line);
    std::vector<Vertex> set;
    long long v = 0;
    while (row >> v) {
      if (v < 0)
        throw ParseError("negative vertex id in certificate");
      set.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof())
      throw ParseError("bad certificate line: " + line);
    file.certificate.branch_sets.push_back(std::move(set));
  }
  return file;
}

void save_graph(const std::filesystem::path &file, const Graph &g) {
  auto out = open_out(file);
  write_graph(out, g);
  if (!out)
    throw IoError("write failed: " + file.string());
}

Graph load_graph(const std::filesystem::path &file) {
  auto in = open_in(file);
  return read_graph(in);
}

void save_certificate(const std::filesystem::path &file, const MinorCertificate &cert, std::size_t vertex_count) {
  auto out = open_out(file);
  write_certificate(out, cert, vertex_count);
  if (!out)
    throw IoError("write failed: " + file.string());
}

CertificateFile load_certificate(const std::filesystem::path &file) {
  auto in = open_in(file);
  return read_certificate(in);
}

} // namespace rgminor
