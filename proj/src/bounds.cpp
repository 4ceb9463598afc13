#include "ndq/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace ndq {

namespace {

// Mirrors data/known_values.txt; a unit test keeps the two in sync.
constexpr const char* kBuiltinRegistry = R"(
1 3 exact 1
2 3 exact 1
3 3 exact 4
4 3 exact 7
5 3 exact 13
6 3 exact 21
7 3 exact 32
8 3 exact 48
9 3 exact 67
10 3 exact 91
11 3 exact 121
12 3 exact 133
13 3 exact 169
14 3 lower 172
1 4 exact 1
2 4 exact 1
3 4 exact 6
4 4 exact 16
5 4 exact 38
6 4 exact 80
7 4 exact 145
1 5 exact 1
2 5 exact 1
3 5 exact 11
4 5 exact 32
5 5 lower 89
)";

// Iterates 1-based coordinate tuples over [lo_i, hi_i] boxes, first axis
// fastest (matching square-index order when the box is the whole board).
class BoxIter {
 public:
  BoxIter(std::vector<int> lo, std::vector<int> hi)
      : lo_(std::move(lo)), hi_(std::move(hi)), cur_(lo_), done_(false) {
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (lo_[i] > hi_[i]) done_ = true;
  }

  bool done() const { return done_; }
  const std::vector<int>& coords() const { return cur_; }

  void next() {
    for (std::size_t i = 0; i < cur_.size(); ++i) {
      if (cur_[i] < hi_[i]) {
        ++cur_[i];
        return;
      }
      cur_[i] = lo_[i];
    }
    done_ = true;
  }

 private:
  std::vector<int> lo_, hi_, cur_;
  bool done_;
};

}  // namespace

UnavailableBoundError::UnavailableBoundError(int n_, int d_)
    : std::runtime_error("no exact Q_max value known for the (" +
                         std::to_string(n_) + "," + std::to_string(d_) +
                         ")-board"),
      n(n_),
      d(d_) {}

std::string_view ineq_kind_name(IneqKind kind) {
  switch (kind) {
    case IneqKind::Line: return "line";
    case IneqKind::CubeClique: return "cube";
    case IneqKind::StarClique: return "star";
    case IneqKind::Subsolution: return "sub";
    case IneqKind::Layer: return "layer";
  }
  return "?";
}

KnownValues KnownValues::builtin() { return parse(kBuiltinRegistry); }

KnownValues KnownValues::parse(std::string_view text) {
  KnownValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int n, d;
    std::string status;
    long long k;
    if (!(fields >> n)) continue;  // blank/comment line
    if (!(fields >> d >> status >> k))
      throw std::invalid_argument("registry line " + std::to_string(lineno) +
                                  ": expected 'n d status k'");
    if (n < 1 || d < 1 || k < 1)
      throw std::invalid_argument("registry line " + std::to_string(lineno) +
                                  ": values must be positive");
    if (status == "exact")
      kv.set(n, d, Status::Exact, k);
    else if (status == "lower")
      kv.set(n, d, Status::LowerBound, k);
    else
      throw std::invalid_argument("registry line " + std::to_string(lineno) +
                                  ": unknown status '" + status + "'");
  }
  return kv;
}

KnownValues KnownValues::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

KnownValues::Entry KnownValues::lookup(int n, int d) const {
  if (n < 1 || d < 1)
    throw std::invalid_argument("lookup requires n >= 1 and d >= 1");
  // n <= 2: all squares pairwise attack; d = 1: the board is one line.
  if (n <= 2 || d == 1) return Entry{Status::Exact, 1};
  auto it = table_.find({n, d});
  if (it == table_.end()) return Entry{Status::Unknown, 0};
  return it->second;
}

bool KnownValues::has_exact(int n, int d) const {
  return lookup(n, d).status == Status::Exact;
}

long long KnownValues::exact(int n, int d) const {
  Entry e = lookup(n, d);
  if (e.status != Status::Exact) throw UnavailableBoundError(n, d);
  return e.value;
}

void KnownValues::set(int n, int d, Status status, long long value) {
  table_[{n, d}] = Entry{status, value};
}

std::vector<Inequality> cube_cliques(const BoardSpec& spec, int h) {
  if (h < 1 || h > spec.n - 1)
    throw std::invalid_argument("cube spacing h must satisfy 1 <= h <= n-1, got h=" +
                                std::to_string(h));
  std::vector<Inequality> out;
  const int corners = 1 << spec.d;
  std::vector<int> corner(static_cast<std::size_t>(spec.d));
  for (BoxIter anchor(std::vector<int>(spec.d, 1), std::vector<int>(spec.d, spec.n - h));
       !anchor.done(); anchor.next()) {
    Inequality ineq{IneqKind::CubeClique, {}, 1};
    ineq.h = h;
    ineq.squares.reserve(static_cast<std::size_t>(corners) + 1);
    for (int mask = 0; mask < corners; ++mask) {
      for (int i = 0; i < spec.d; ++i)
        corner[i] = anchor.coords()[i] + ((mask >> i) & 1) * h;
      ineq.squares.push_back(coord_to_index(spec, corner));
    }
    if (h % 2 == 0) {
      for (int i = 0; i < spec.d; ++i) corner[i] = anchor.coords()[i] + h / 2;
      ineq.squares.push_back(coord_to_index(spec, corner));
    }
    std::sort(ineq.squares.begin(), ineq.squares.end());
    out.push_back(std::move(ineq));
  }
  return out;
}

std::vector<Inequality> star_cliques(const BoardSpec& spec, int h) {
  if (h < 1)
    throw std::invalid_argument("star spacing h must be >= 1, got h=" + std::to_string(h));
  std::vector<Inequality> out;
  if (2 * h >= spec.n) return out;  // no center fits
  std::vector<int> tip(static_cast<std::size_t>(spec.d));
  for (BoxIter center(std::vector<int>(spec.d, 1 + h), std::vector<int>(spec.d, spec.n - h));
       !center.done(); center.next()) {
    Inequality ineq{IneqKind::StarClique, {}, 1};
    ineq.h = h;
    ineq.squares.reserve(2 * static_cast<std::size_t>(spec.d) + 1);
    ineq.squares.push_back(coord_to_index(spec, center.coords()));
    for (int i = 0; i < spec.d; ++i) {
      for (int sign : {+1, -1}) {
        tip = center.coords();
        tip[i] += sign * h;
        ineq.squares.push_back(coord_to_index(spec, tip));
      }
    }
    std::sort(ineq.squares.begin(), ineq.squares.end());
    out.push_back(std::move(ineq));
  }
  return out;
}

std::vector<Inequality> subsolution_ineqs(const BoardSpec& spec, int m,
                                          const KnownValues& known) {
  if (m < 2 || m >= spec.n)
    throw std::invalid_argument("subsolution edge m must satisfy 2 <= m < n, got m=" +
                                std::to_string(m));
  const long long rhs = known.exact(m, spec.d);
  std::vector<Inequality> out;
  std::vector<int> lo(static_cast<std::size_t>(spec.d)), hi(lo);
  for (BoxIter base(std::vector<int>(spec.d, 1), std::vector<int>(spec.d, spec.n - m + 1));
       !base.done(); base.next()) {
    Inequality ineq{IneqKind::Subsolution, {}, rhs};
    ineq.sub_m = m;
    for (int i = 0; i < spec.d; ++i) {
      lo[i] = base.coords()[i];
      hi[i] = base.coords()[i] + m - 1;
    }
    for (BoxIter sq(lo, hi); !sq.done(); sq.next())
      ineq.squares.push_back(coord_to_index(spec, sq.coords()));
    std::sort(ineq.squares.begin(), ineq.squares.end());
    out.push_back(std::move(ineq));
  }
  return out;
}

namespace {

// Emits every slice with the given axis subset fixed, one inequality per
// value tuple.
void emit_layers(const BoardSpec& spec, const std::vector<int>& axes, long long rhs,
                 std::vector<Inequality>& out) {
  const std::size_t t = axes.size();
  for (BoxIter values(std::vector<int>(t, 1), std::vector<int>(t, spec.n));
       !values.done(); values.next()) {
    Inequality ineq{IneqKind::Layer, {}, rhs};
    for (std::size_t j = 0; j < t; ++j) {
      ineq.fixed_axes.push_back(axes[j]);
      ineq.fixed_values.push_back(values.coords()[j]);
    }
    const std::uint64_t total = spec.square_count();
    std::vector<int> coords;
    for (SquareIndex s = 0; s < total; ++s) {
      coords = index_to_coord(spec, s);
      bool match = true;
      for (std::size_t j = 0; j < t; ++j)
        if (coords[static_cast<std::size_t>(axes[j] - 1)] != values.coords()[j]) {
          match = false;
          break;
        }
      if (match) ineq.squares.push_back(s);
    }
    out.push_back(std::move(ineq));
  }
}

// Lexicographic k-combinations of {1, ..., d}.
void for_each_axis_subset(int d, int t, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> axes(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) axes[i] = i + 1;
  for (;;) {
    fn(axes);
    int i = t - 1;
    while (i >= 0 && axes[i] == d - (t - 1 - i)) --i;
    if (i < 0) break;
    ++axes[i];
    for (int j = i + 1; j < t; ++j) axes[j] = axes[j - 1] + 1;
  }
}

}  // namespace

std::vector<Inequality> layer_ineqs(const BoardSpec& spec, const KnownValues& known,
                                    bool recursive) {
  if (spec.d < 2)
    throw std::invalid_argument("layer inequalities require d >= 2");
  if (!known.has_exact(spec.n, spec.d - 1))
    throw UnavailableBoundError(spec.n, spec.d - 1);
  std::vector<Inequality> out;
  const int max_depth = recursive ? spec.d - 1 : 1;
  for (int t = 1; t <= max_depth; ++t) {
    if (!known.has_exact(spec.n, spec.d - t)) break;  // deeper values missing
    const long long rhs = known.exact(spec.n, spec.d - t);
    for_each_axis_subset(spec.d, t, [&](const std::vector<int>& axes) {
      emit_layers(spec, axes, rhs, out);
    });
  }
  return out;
}

}  // namespace ndq
