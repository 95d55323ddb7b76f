#include "morse.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <stdexcept>

namespace khof::detail {

namespace {

constexpr int kBL = 0, kBR = 1, kTR = 2, kTL = 3;
constexpr std::array<std::array<int, 2>, 4> kSlotPos = {{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};

}  // namespace

int MorseBuilder::new_token() {
  adj_.emplace_back();
  return next_token_++;
}

void MorseBuilder::link(int a, int b) {
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

void MorseBuilder::cup(int pos, int label, bool left_up) {
  if (pos < 0 || pos > width()) throw std::out_of_range("cup position");
  int a = new_token(), b = new_token();
  link(a, b);
  cups_.push_back({a, b, label, left_up});
  open_.insert(open_.begin() + pos, {a, b});
}

void MorseBuilder::cap(int pos) {
  if (pos < 0 || pos + 1 >= width()) throw std::out_of_range("cap position");
  link(open_[pos], open_[pos + 1]);
  open_.erase(open_.begin() + pos, open_.begin() + pos + 2);
}

void MorseBuilder::cross(int pos, int letter) {
  if (pos < 0 || pos + 1 >= width()) throw std::out_of_range("crossing position");
  if (letter == 0) throw std::invalid_argument("crossing letter must be nonzero");
  std::array<int, 4> slot{};
  for (int s = 0; s < 4; ++s) {
    slot[s] = new_token();
    slot_token_.push_back(slot[s]);
  }
  link(open_[pos], slot[kBL]);
  link(open_[pos + 1], slot[kBR]);
  open_[pos] = slot[kTL];
  open_[pos + 1] = slot[kTR];
  bltr_over_.push_back(letter > 0);
  ++crossings_;
}

GaussCode MorseBuilder::finish() const {
  if (!open_.empty()) throw std::logic_error("Morse presentation has open strands");

  const int ntok = next_token_;
  std::vector<int> slot_of(ntok, -1);  // token -> 4k+s
  for (int i = 0; i < static_cast<int>(slot_token_.size()); ++i) slot_of[slot_token_[i]] = i;
  std::vector<int> cup_of(ntok, -1);
  for (int c = 0; c < static_cast<int>(cups_.size()); ++c) {
    cup_of[cups_[c].left] = c;
    cup_of[cups_[c].right] = c;
  }

  // Slot tokens have one link, cup tokens two. Walking from a slot reaches
  // the partner slot; multi-links only occur on free loops.
  std::vector<int> partner(4 * crossings_, -1);
  std::vector<std::vector<int>> path(4 * crossings_);
  std::vector<bool> seen(ntok, false);
  for (int i = 0; i < 4 * crossings_; ++i) {
    int start = slot_token_[i];
    int prev = start, cur = adj_[start].at(0);
    std::vector<int> p;
    while (slot_of[cur] < 0) {
      seen[cur] = true;
      p.push_back(cur);
      int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
      prev = cur;
      cur = next;
    }
    partner[i] = slot_of[cur];
    path[i] = std::move(p);
  }

  struct Step {
    int k, entry, exit;
  };
  struct Comp {
    std::vector<Step> steps;
    int first_cup = -1;
    int label = 0;
  };
  std::vector<Comp> comps;
  std::vector<bool> visited(4 * crossings_, false);

  for (int start = 0; start < 4 * crossings_; ++start) {
    if (visited[start]) continue;
    Comp comp;
    std::vector<std::pair<int, bool>> cup_passes;  // (cup, traversed left->right)
    int entry = start;
    do {
      int k = entry / 4, e = entry % 4, x = (e + 2) % 4;
      visited[entry] = visited[4 * k + x] = true;
      comp.steps.push_back({k, e, x});
      const auto& p = path[4 * k + x];
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        int c = cup_of[p[j]];
        if (c >= 0 && cup_of[p[j + 1]] == c) cup_passes.emplace_back(c, p[j] == cups_[c].left);
      }
      entry = partner[4 * k + x];
    } while (entry != start);

    auto it = std::min_element(cup_passes.begin(), cup_passes.end());
    if (it == cup_passes.end()) throw std::logic_error("component without a cup");
    const Cup& cup = cups_[it->first];
    bool left_to_right = it->second;
    // left_up means the flow runs right -> left through the cup.
    if (cup.left_up == left_to_right) {
      std::reverse(comp.steps.begin(), comp.steps.end());
      for (auto& s : comp.steps) std::swap(s.entry, s.exit);
    }
    comp.first_cup = it->first;
    comp.label = cup.label;
    comps.push_back(std::move(comp));
  }

  // Free loops: cups untouched by any chain.
  for (int c = 0; c < static_cast<int>(cups_.size()); ++c) {
    if (seen[cups_[c].left]) continue;
    // Mark the whole loop.
    int prev = cups_[c].left, cur = adj_[prev][0];
    seen[prev] = true;
    while (!seen[cur]) {
      seen[cur] = true;
      int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
      prev = cur;
      cur = next;
    }
    comps.push_back({{}, c, cups_[c].label});
  }

  std::stable_sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    return std::tie(a.label, a.first_cup) < std::tie(b.label, b.first_cup);
  });

  GaussCode g;
  g.signs.assign(crossings_, 0);
  std::vector<std::array<int, 2>> over_dir(crossings_), under_dir(crossings_);
  for (const auto& comp : comps) {
    std::vector<Visit> visits;
    for (const auto& s : comp.steps) {
      bool bltr = s.entry % 2 == 0;
      bool over = bltr == bltr_over_[s.k];
      std::array<int, 2> dir = {kSlotPos[s.exit][0] - kSlotPos[s.entry][0],
                                kSlotPos[s.exit][1] - kSlotPos[s.entry][1]};
      (over ? over_dir : under_dir)[s.k] = dir;
      visits.push_back({s.k, over});
    }
    g.components.push_back(std::move(visits));
  }
  for (int k = 0; k < crossings_; ++k) {
    const auto& o = over_dir[k];
    const auto& u = under_dir[k];
    g.signs[k] = (u[0] == -o[1] && u[1] == o[0]) ? 1 : -1;
  }
  return g;
}

}  // namespace khof::detail
