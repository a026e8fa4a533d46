#include "permatch/colour.hpp"

#include <algorithm>

#include "permatch/error.hpp"
#include "permatch/matching.hpp"

namespace permatch {

  bool ColourInstance::well_formed() const {
    if (girls == 0 || colours == 0 || balls.size() != girls * colours) {
      return false;
    }
    std::vector<std::size_t> per_girl(girls, 0), per_colour(colours, 0);
    for (Ball const& b : balls) {
      if (b.girl >= girls || b.colour >= colours) {
        return false;
      }
      ++per_girl[b.girl];
      ++per_colour[b.colour];
    }
    return std::all_of(per_girl.begin(), per_girl.end(),
                       [&](std::size_t k) { return k == colours; })
           && std::all_of(per_colour.begin(), per_colour.end(),
                          [&](std::size_t k) { return k == girls; })
           && (!provenance || provenance->size() == balls.size());
  }

  std::vector<std::size_t> ColourInstance::colour_counts() const {
    std::vector<std::size_t> counts(girls * colours, 0);
    for (Ball const& b : balls) {
      ++counts[b.girl * colours + b.colour];
    }
    return counts;
  }

  std::vector<std::pair<std::size_t, std::size_t>> ExchangePlan::exchanges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < partner.size(); ++i) {
      if (partner[i] > i) {
        out.emplace_back(i, partner[i]);
      }
    }
    return out;
  }

  ExchangePlan ExchangePlan::vacuous(std::size_t balls) {
    ExchangePlan plan;
    plan.partner.resize(balls);
    for (std::size_t i = 0; i < balls; ++i) {
      plan.partner[i] = i;
    }
    return plan;
  }

  namespace {

    class Solver {
     public:
      Solver(ColourInstance const& inst, std::uint64_t budget)
          : _m(inst.girls),
            _n(inst.colours),
            _balls(inst.balls),
            _budget(budget),
            _count(inst.colour_counts()),
            _free(_count),
            _assigned(inst.balls.size(), false),
            _partner(ExchangePlan::vacuous(inst.balls.size()).partner) {}

      SolveResult run() {
        SolveResult result;
        bool const  found = search();
        result.nodes      = _nodes;
        if (found) {
          result.status = SolveStatus::solved;
          result.plan   = ExchangePlan{_partner};
        } else {
          result.status = _exhausted ? SolveStatus::budget_exhausted
                                     : SolveStatus::unsolvable;
        }
        return result;
      }

     private:
      std::size_t& count(std::size_t g, std::size_t c) {
        return _count[g * _n + c];
      }
      std::size_t& free(std::size_t g, std::size_t c) {
        return _free[g * _n + c];
      }

      std::size_t least_free_ball(std::size_t g, std::size_t c) const {
        for (std::size_t x = 0; x < _balls.size(); ++x) {
          if (!_assigned[x] && _balls[x].girl == g && _balls[x].colour == c) {
            return x;
          }
        }
        return _balls.size();
      }

      bool feasible() {
        for (std::size_t g = 0; g < _m; ++g) {
          std::size_t missing = 0, unassigned = 0;
          for (std::size_t c = 0; c < _n; ++c) {
            // surplus can only leave through unassigned balls
            if (count(g, c) > free(g, c) + 1) {
              return false;
            }
            unassigned += free(g, c);
            if (count(g, c) == 0) {
              ++missing;
              bool supplier = false;
              for (std::size_t h = 0; h < _m && !supplier; ++h) {
                supplier = h != g && free(h, c) > 0;
              }
              if (!supplier) {
                return false;
              }
            }
          }
          if (missing > unassigned) {
            return false;
          }
        }
        return true;
      }

      std::size_t options(std::size_t g, std::size_t d) {
        std::size_t senders = 0, suppliers = 0;
        for (std::size_t c = 0; c < _n; ++c) {
          senders += c != d && free(g, c) > 0;
        }
        for (std::size_t h = 0; h < _m; ++h) {
          suppliers += h != g && free(h, d) > 0;
        }
        return senders * suppliers;
      }

      void exchange(std::size_t x, std::size_t y, bool undo) {
        std::size_t const g = _balls[x].girl, c = _balls[x].colour;
        std::size_t const h = _balls[y].girl, d = _balls[y].colour;
        if (!undo) {
          _assigned[x] = _assigned[y] = true;
          _partner[x]                 = y;
          _partner[y]                 = x;
          --count(g, c), ++count(g, d), --count(h, d), ++count(h, c);
          --free(g, c), --free(h, d);
        } else {
          _assigned[x] = _assigned[y] = false;
          _partner[x]                 = x;
          _partner[y]                 = y;
          ++count(g, c), --count(g, d), ++count(h, d), --count(h, c);
          ++free(g, c), ++free(h, d);
        }
      }

      bool search() {
        if (++_nodes > _budget) {
          _exhausted = true;
          return false;
        }
        if (!feasible()) {
          return false;
        }
        std::size_t best_g = _m, best_d = _n, best = SIZE_MAX;
        for (std::size_t g = 0; g < _m; ++g) {
          for (std::size_t d = 0; d < _n; ++d) {
            if (count(g, d) == 0) {
              std::size_t const k = options(g, d);
              if (k < best) {
                best   = k;
                best_g = g;
                best_d = d;
              }
            }
          }
        }
        if (best_g == _m) {
          return true;  // nobody misses a colour, so everyone has one of each
        }
        std::size_t const g = best_g, d = best_d;
        // surplus colours are the natural ones to give away; try them first
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t c = 0; c < _n; ++c) {
            if (c == d || free(g, c) == 0 || (count(g, c) > 1) != (pass == 0)) {
              continue;
            }
            std::size_t const x = least_free_ball(g, c);
            for (std::size_t h = 0; h < _m; ++h) {
              if (h == g || free(h, d) == 0) {
                continue;
              }
              std::size_t const y = least_free_ball(h, d);
              exchange(x, y, false);
              if (search()) {
                return true;
              }
              exchange(x, y, true);
              if (_exhausted) {
                return false;
              }
            }
          }
        }
        return false;
      }

      std::size_t              _m, _n;
      std::vector<Ball> const& _balls;
      std::uint64_t            _budget;
      std::uint64_t            _nodes     = 0;
      bool                     _exhausted = false;
      std::vector<std::size_t> _count;  // current holdings
      std::vector<std::size_t> _free;   // unassigned balls per (girl, colour)
      std::vector<bool>        _assigned;
      std::vector<std::size_t> _partner;
    };

  }  // namespace

  SolveResult solve(ColourInstance const& instance, std::uint64_t node_budget) {
    if (!instance.well_formed()) {
      throw Error(ErrorCode::malformed_instance,
                  "need n balls per girl and m balls per colour");
    }
    return Solver(instance, node_budget).run();
  }

  bool verify_plan(ColourInstance const& instance, ExchangePlan const& plan) {
    std::size_t const k = instance.balls.size();
    if (plan.partner.size() != k) {
      throw Error(ErrorCode::index_out_of_range,
                  "plan covers " + std::to_string(plan.partner.size())
                      + " balls, instance has " + std::to_string(k));
    }
    for (std::size_t x = 0; x < k; ++x) {
      if (plan.partner[x] >= k) {
        throw Error(ErrorCode::index_out_of_range,
                    "ball index " + std::to_string(plan.partner[x]));
      }
    }
    for (std::size_t x = 0; x < k; ++x) {
      if (plan.partner[plan.partner[x]] != x) {
        return false;
      }
    }
    std::vector<std::size_t> held(instance.girls * instance.colours, 0);
    for (std::size_t x = 0; x < k; ++x) {
      // ball x ends up with the girl who held its partner
      std::size_t const owner = instance.balls[plan.partner[x]].girl;
      ++held[owner * instance.colours + instance.balls[x].colour];
    }
    return std::all_of(held.begin(), held.end(),
                       [](std::size_t c) { return c == 1; });
  }

  ColourInstance instance_from_matching(ZeroRectBand const&        B,
                                        PermutationMatching const& phi) {
    FiniteSemigroup const S = to_semigroup(B);
    if (phi.size() != S.size() || !is_permutation(phi.image) || phi[0] != 0
        || !verify_permutation_matching(S, phi.image)) {
      throw Error(ErrorCode::not_a_matching,
                  "expected a permutation matching of the band fixing 0");
    }
    ColourInstance inst;
    inst.girls   = B.rows();
    inst.colours = B.cols();
    inst.provenance.emplace();
    for (std::size_t a = 0; a < B.rows(); ++a) {
      for (std::size_t alpha = 0; alpha < B.cols(); ++alpha) {
        Element const image = phi[B.element(a, alpha)];
        inst.balls.push_back({a, B.col_of(image)});
        inst.provenance->emplace_back(a, alpha);
      }
    }
    return inst;
  }

  InvolutionMatching involution_from_plan(ZeroRectBand const&        B,
                                          PermutationMatching const& phi,
                                          ColourInstance const&      instance,
                                          ExchangePlan const&        plan) {
    std::size_t const m = B.rows(), n = B.cols();
    if (!instance.provenance || instance.girls != m || instance.colours != n
        || instance.balls.size() != m * n || plan.partner.size() != m * n
        || phi.size() != B.order()) {
      throw Error(ErrorCode::plan_instance_mismatch,
                  "plan, instance and band do not describe the same shape");
    }
    auto const& origin = *instance.provenance;
    for (std::size_t x = 0; x < m * n; ++x) {
      auto const [a, alpha] = origin[x];
      if (a >= m || alpha >= n || plan.partner[x] >= m * n
          || plan.partner[plan.partner[x]] != x
          || instance.balls[x].girl != a
          || instance.balls[x].colour != B.col_of(phi[B.element(a, alpha)])) {
        throw Error(ErrorCode::plan_instance_mismatch,
                    "ball " + std::to_string(x)
                        + " does not match the matching it came from");
      }
    }
    InvolutionMatching result{std::vector<Element>(B.order(), kNoElement)};
    result.image[0] = 0;
    for (std::size_t x = 0; x < m * n; ++x) {
      std::size_t const y    = plan.partner[x];
      std::size_t const a    = origin[x].first;
      std::size_t const b    = origin[y].first;
      Element const     from = B.element(a, instance.balls[y].colour);
      Element const     to   = B.element(b, instance.balls[x].colour);
      if (result.image[from] != kNoElement) {
        throw Error(ErrorCode::well_definedness_violation,
                    "girl " + std::to_string(a) + " ends with colour "
                        + std::to_string(instance.balls[y].colour) + " twice");
      }
      result.image[from] = to;
    }
    return result;
  }

}  // namespace permatch
