#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

namespace dynamik {

/// One recognition result. `text` is the whole current hypothesis for the
/// active utterance, not a delta.
struct HypothesisEvent {
  std::int64_t t_ms = 0;
  std::string text;
  bool is_final = false;

  friend bool operator==(const HypothesisEvent&, const HypothesisEvent&) = default;
};

/// Timed hypotheses standing in for a live recognizer. An utterance runs up
/// to and including its is_final event.
struct ReplayScript {
  std::string name;
  std::vector<HypothesisEvent> events;
};

/// Parses `{"name": ..., "events": [{"t_ms", "text", "is_final"}, ...]}`.
/// Throws ParseError whose location() is the offending event index (0 for
/// document-level problems).
ReplayScript parse_replay_script(std::string_view document);
std::string to_json(const ReplayScript& script);

/// Builds a single-utterance script revealing `transcript` one word every
/// `ms_per_word`, starting at 0 ms, then a final event carrying the full
/// text one step after the last word. With `per_sentence`, each sentence
/// becomes its own utterance instead.
ReplayScript synthesize_script(std::string name, std::string_view transcript, std::int64_t ms_per_word = 300,
                               bool per_sentence = false);

/// Maps stream time to wall time at a fixed scale. Scale 0 is a virtual
/// clock: every wait returns at once.
class ReplayClock {
 public:
  using WallClock = std::chrono::steady_clock;

  explicit ReplayClock(double scale = 1.0);

  /// Pins stream time 0 to now.
  void start();

  bool is_virtual() const noexcept { return scale_ == 0.0; }
  double scale() const noexcept { return scale_; }
  WallClock::time_point wall_time(std::int64_t stream_ms) const;

  /// Sleeps until the wall time of `stream_ms`. Returns false if `stop` was
  /// requested first.
  bool sleep_until(std::int64_t stream_ms, std::stop_token stop = {}) const;

 private:
  double scale_;
  WallClock::time_point origin_;
};

struct ReplayHandlers {
  std::function<void(const HypothesisEvent&)> deliver;
  /// Called with h before waiting for the next event: every event with
  /// t_ms <= h has now been delivered.
  std::function<void(std::int64_t)> horizon;
};

/// Delivers the script's events in order at their scaled times. `clock`
/// must already be started. Returns early when `stop` is requested.
void replay(const ReplayScript& script, const ReplayClock& clock, const ReplayHandlers& handlers,
            std::stop_token stop = {});

}  // namespace dynamik
