#ifndef RGMINOR_IO_HPP
#define RGMINOR_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "rgminor/certificate.hpp"
#include "rgminor/graph.hpp"

namespace rgminor {

// Graph file: "n m" then m lines "u v" with u < v, lexicographically sorted.
void write_graph(std::ostream &out, const Graph &g);
Graph read_graph(std::istream &in);

// Certificate file: "order n" then one line of sorted vertex ids per
// branch set.
void write_certificate(std::ostream &out, const MinorCertificate &cert, std::size_t vertex_count);

struct CertificateFile {
  MinorCertificate certificate;
  std::size_t vertex_count = 0;
};
CertificateFile read_certificate(std::istream &in);

void save_graph(const std::filesystem::path &file, const Graph &g);
Graph load_graph(const std::filesystem::path &file);
void save_certificate(const std::filesystem::path &file, const MinorCertificate &cert, std::size_t vertex_count);
CertificateFile load_certificate(const std::filesystem::path &file);

} // namespace rgminor

#endif
