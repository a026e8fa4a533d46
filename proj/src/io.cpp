#include "permatch/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "permatch/error.hpp"

namespace permatch::io {

  namespace {

    constexpr std::string_view kLabelsTag = "# labels:";

    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorCode::parse, what);
    }

    // Next line that is neither blank nor a plain comment.
    bool next_line(std::istream& in, std::string& line) {
      while (std::getline(in, line)) {
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
          continue;
        }
        if (line[first] == '#' && line.compare(first, kLabelsTag.size(), kLabelsTag) != 0) {
          continue;
        }
        line = line.substr(first);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
          line.pop_back();
        }
        return true;
      }
      return false;
    }

    std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       is(line);
      std::vector<std::string> out{std::istream_iterator<std::string>(is), {}};
      return out;
    }

    std::size_t to_size(std::string const& tok) {
      std::size_t pos = 0;
      unsigned long long v;
      try {
        v = std::stoull(tok, &pos);
      } catch (std::exception const&) {
        fail("expected a non-negative integer, got '" + tok + "'");
      }
      if (pos != tok.size() || tok.front() == '-') {
        fail("expected a non-negative integer, got '" + tok + "'");
      }
      return static_cast<std::size_t>(v);
    }

    std::pair<std::size_t, std::size_t> read_shape(std::istream& in) {
      std::string line;
      if (!next_line(in, line)) {
        fail("empty input");
      }
      auto const t = tokens(line);
      if (t.size() != 2) {
        fail("expected 'm n' on the first line");
      }
      return {to_size(t[0]), to_size(t[1])};
    }

  }  // namespace

  FiniteSemigroup read_cayley(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
      fail("empty input");
    }
    auto const head = tokens(line);
    if (head.size() != 1) {
      fail("expected the order on the first line");
    }
    std::size_t const n = to_size(head[0]);
    if (n == 0) {
      fail("order must be positive");
    }
    std::vector<Element> table;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!next_line(in, line)) {
        fail("expected " + std::to_string(n) + " table rows");
      }
      auto const row = tokens(line);
      if (row.size() != n) {
        fail("row " + std::to_string(r) + " has " + std::to_string(row.size())
             + " entries, expected " + std::to_string(n));
      }
      for (auto const& tok : row) {
        std::size_t const v = to_size(tok);
        // out-of-range entries are reported by validate()
        table.push_back(v > kNoElement ? kNoElement : static_cast<Element>(v));
      }
    }
    std::vector<std::string> labels;
    if (next_line(in, line)) {
      if (line.rfind(kLabelsTag, 0) != 0) {
        fail("unexpected trailing line '" + line + "'");
      }
      labels = tokens(line.substr(kLabelsTag.size()));
      if (labels.size() != n) {
        fail("expected " + std::to_string(n) + " labels");
      }
    }
    return FiniteSemigroup(n, std::move(table), std::move(labels));
  }

  void write_cayley(std::ostream& out, FiniteSemigroup const& S) {
    out << S.size() << '\n';
    for (Element a = 0; a < S.size(); ++a) {
      auto const row = S.row(a);
      for (std::size_t b = 0; b < row.size(); ++b) {
        out << (b ? " " : "") << row[b];
      }
      out << '\n';
    }
    if (!S.labels().empty()) {
      out << kLabelsTag;
      for (auto const& l : S.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
  }

  ZeroRectBand read_band(std::istream& in) {
    auto const [m, n] = read_shape(in);
    if (m == 0 || n == 0) {
      fail("band needs m, n >= 1");
    }
    std::vector<bool> pattern;
    std::string       line;
    for (std::size_t i = 0; i < m; ++i) {
      if (!next_line(in, line) || line.size() != n) {
        fail("expected " + std::to_string(m) + " rows of " + std::to_string(n)
             + " characters");
      }
      for (char ch : line) {
        if (ch != '0' && ch != '1') {
          fail("band rows may only contain '0' and '1'");
        }
        pattern.push_back(ch == '1');
      }
    }
    if (next_line(in, line)) {
      fail("unexpected trailing line '" + line + "'");
    }
    return ZeroRectBand(m, n, std::move(pattern));
  }

  void write_band(std::ostream& out, ZeroRectBand const& B) {
    out << B.rows() << ' ' << B.cols() << '\n';
    for (std::size_t i = 0; i < B.rows(); ++i) {
      for (std::size_t j = 0; j < B.cols(); ++j) {
        out << (B.idempotent(i, j) ? '1' : '0');
      }
      out << '\n';
    }
  }

  ColourInstance read_instance(std::istream& in) {
    auto const [m, n] = read_shape(in);
    ColourInstance inst;
    inst.girls   = m;
    inst.colours = n;
    std::string line;
    for (std::size_t k = 0; k < m * n; ++k) {
      if (!next_line(in, line)) {
        fail("expected " + std::to_string(m * n) + " 'girl colour' lines");
      }
      auto const t = tokens(line);
      if (t.size() != 2) {
        fail("expected 'girl colour', got '" + line + "'");
      }
      inst.balls.push_back({to_size(t[0]), to_size(t[1])});
    }
    if (next_line(in, line)) {
      fail("unexpected trailing line '" + line + "'");
    }
    if (!inst.well_formed()) {
      throw Error(ErrorCode::malformed_instance,
                  "need n balls per girl and m balls per colour");
    }
    return inst;
  }

  void write_instance(std::ostream& out, ColourInstance const& inst) {
    out << inst.girls << ' ' << inst.colours << '\n';
    for (Ball const& b : inst.balls) {
      out << b.girl << ' ' << b.colour << '\n';
    }
  }

  ExchangePlan read_plan(std::istream& in, std::size_t balls) {
    ExchangePlan plan = ExchangePlan::vacuous(balls);
    std::string  line;
    while (next_line(in, line)) {
      auto const t = tokens(line);
      if (t.size() != 2) {
        fail("expected 'i j', got '" + line + "'");
      }
      std::size_t const i = to_size(t[0]), j = to_size(t[1]);
      if (i >= balls || j >= balls) {
        throw Error(ErrorCode::index_out_of_range, "ball index out of range in plan");
      }
      if (plan.partner[i] != i || plan.partner[j] != j) {
        fail("ball exchanged twice in plan");
      }
      plan.partner[i] = j;
      plan.partner[j] = i;
    }
    return plan;
  }

  void write_plan(std::ostream& out, ExchangePlan const& plan) {
    for (auto const& [i, j] : plan.exchanges()) {
      out << i << ' ' << j << '\n';
    }
  }

  std::vector<Element> read_matching(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
      fail("empty matching");
    }
    std::vector<Element> p;
    for (auto const& tok : tokens(line)) {
      std::size_t const v = to_size(tok);
      p.push_back(v > kNoElement ? kNoElement : static_cast<Element>(v));
    }
    return p;
  }

  void write_matching(std::ostream& out, std::vector<Element> const& p) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      out << (k ? " " : "") << p[k];
    }
    out << '\n';
  }

  SemigroupInput read_semigroup_input(std::string const& text) {
    std::istringstream probe(text);
    std::string        line;
    if (!next_line(probe, line)) {
      fail("empty input");
    }
    std::istringstream in(text);
    if (tokens(line).size() == 2) {
      return read_band(in);
    }
    return read_cayley(in);
  }

  std::string slurp(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::string digest(std::string const& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

}  // namespace permatch::io
