#include "invgraph/graph6.hpp"

#include <stdexcept>

namespace invgraph {

SimpleGraph from_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
  if (header < 63 || header > 63 + 62) throw std::invalid_argument("graph6: bad header byte");
  int n = header - 63;
  int m = n * (n - 1) / 2;
  std::size_t nbytes = (m + 5) / 6;
  if (text.size() != 1 + nbytes) throw std::invalid_argument("graph6: length mismatch");

  SimpleGraph g(n);
  int i = 0, j = 1;  // next upper-triangle pair, column order
  for (std::size_t b = 0; b < nbytes; ++b) {
    unsigned char c = static_cast<unsigned char>(text[1 + b]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    int group = c - 63;
    for (int t = 5; t >= 0; --t) {
      int bit = group >> t & 1;
      if (j < n) {
        if (bit) g.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        throw std::invalid_argument("graph6: nonzero padding");
      }
    }
  }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: order must be <= 62");
  int m = n * (n - 1) / 2;
  std::string out;
  out.reserve(1 + (m + 5) / 6);
  out.push_back(static_cast<char>(63 + n));
  int group = 0, t = 5;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.edge(i, j)) group |= 1 << t;
      if (--t < 0) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        t = 5;
      }
    }
  }
  if (m % 6 != 0) out.push_back(static_cast<char>(63 + group));
  return out;
}

}  // namespace invgraph
