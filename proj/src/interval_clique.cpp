#include "geostream/interval_clique.hpp"

#include <algorithm>
#include <string>

namespace geostream {

namespace {

std::uint64_t coordinate_index(const Coord& c, std::uint64_t universe) {
  if (!c.is_integer()) throw UniverseError("endpoint " + c.str() + " is not an integer");
  const BigInt v = c.numerator();
  if (v < 1 || v > BigInt(static_cast<unsigned long>(universe))) {
    throw UniverseError("endpoint " + c.str() + " outside universe 1.." + std::to_string(universe));
  }
  return v.get_ui();
}

}  // namespace

CounterArray::CounterArray(std::uint64_t universe) : counts_(universe, 0) {
  if (universe == 0) throw std::invalid_argument("universe must be at least 1");
}

void CounterArray::pass1_process(const Interval& iv) {
  if (phase_ != Phase::counting) throw PhaseError("counting pass already finished");
  const std::uint64_t lo = coordinate_index(iv.lo, universe());
  const std::uint64_t hi = coordinate_index(iv.hi, universe());
  for (std::uint64_t c = lo; c <= hi; ++c) {
    const std::uint64_t v = ++counts_[c - 1];
    max_count_ = std::max(max_count_, v);
  }
}

CliqueSize CounterArray::omega() const {
  if (max_count_ == 0) return {};
  const auto it = std::find(counts_.begin(), counts_.end(), max_count_);
  return {max_count_, static_cast<std::uint64_t>(it - counts_.begin()) + 1};
}

void CounterArray::end_counting() {
  if (phase_ != Phase::counting) throw PhaseError("counting pass already finished");
  witness_ = omega().witness;
  phase_ = Phase::filtering;
}

bool CounterArray::pass2_filter(const Interval& iv) const {
  if (phase_ == Phase::counting) throw PhaseError("pass2_filter called before omega is fixed");
  if (!witness_) return false;
  return iv.contains(Coord(*witness_));
}

void CounterArray::end_filtering() {
  if (phase_ != Phase::filtering) throw PhaseError("no filtering pass in progress");
  phase_ = Phase::done;
}

void CounterArray::encode(BitWriter& out) const {
  out.put_gamma(counts_.size());
  out.put_bits(static_cast<std::uint64_t>(phase_), 2);
  const unsigned width = width_for(max_count_);
  out.put_gamma(width);
  for (auto v : counts_) out.put_bits(v, width);
  if (phase_ != Phase::counting) {
    out.put_bit(witness_.has_value());
    if (witness_) out.put_gamma(*witness_);
  }
}

std::size_t CounterArray::state_size_bits() const {
  BitWriter w;
  encode(w);
  return w.size();
}

std::size_t CounterArray::header_bits() const {
  return state_size_bits() - counts_.size() * width_for(max_count_);
}

IntervalClique::IntervalClique(std::uint64_t universe, Sink sink)
    : counters_(universe), sink_(std::move(sink)) {}

void IntervalClique::process(const Object& o) {
  const auto& iv = std::get<Interval>(o);
  switch (counters_.phase()) {
    case CounterArray::Phase::counting:
      counters_.pass1_process(iv);
      break;
    case CounterArray::Phase::filtering:
      if (counters_.pass2_filter(iv)) {
        if (sink_) {
          sink_(iv);
        } else {
          collected_.push_back(iv);
        }
      }
      break;
    case CounterArray::Phase::done:
      throw PhaseError("interval clique runs at most two passes");
  }
}

void IntervalClique::finish_pass() {
  if (counters_.phase() == CounterArray::Phase::counting) counters_.end_counting();
  else if (counters_.phase() == CounterArray::Phase::filtering) counters_.end_filtering();
}

CliqueResult IntervalClique::result() const {
  const CliqueSize s = counters_.omega();
  return CliqueResult{s.size, s.witness, collected_};
}

std::size_t IntervalClique::state_size_bits() const {
  BitWriter w;
  counters_.encode(w);
  if (counters_.phase() != CounterArray::Phase::counting) {
    w.put_gamma(collected_.size());
    for (const auto& iv : collected_) w.put_interval(iv);
  }
  return w.size();
}

}  // namespace geostream
