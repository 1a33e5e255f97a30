#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>

#include "dynamik/classify.hpp"
#include "dynamik/replay.hpp"
#include "dynamik/style.hpp"

namespace dynamik {

/// The (mode, style) pair a frame is rendered under.
struct Settings {
  Mode mode = Mode::Dynamik;
  StyleConfig style;
};

/// Holds the live settings. Writers replace the whole value; readers take a
/// snapshot that stays valid for as long as they hold it.
class SettingsSlot {
 public:
  explicit SettingsSlot(Settings initial);

  std::shared_ptr<const Settings> load() const;
  void store(Settings next);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const Settings> current_;
};

struct SchedulerOptions {
  std::int64_t refresh_ms = 500;
  /// How long a finished utterance stays on screen.
  std::int64_t linger_ms = 2000;
};

/// Discrete-time frame scheduler. Feed it hypotheses in time order, then
/// call tick() at each refresh boundary; every tick with something on
/// screen yields one frame built from scratch from the latest hypothesis.
class FrameScheduler {
 public:
  FrameScheduler(const Tagger& tagger, const Lexicon& lexicon, SchedulerOptions options = {});

  /// Events must arrive with nondecreasing t_ms.
  void push(const HypothesisEvent& event);
  /// Treats an unfinished utterance as final at its last update.
  void end_of_input();

  std::optional<StyledFrame> tick(std::int64_t t_ms, const Settings& settings);

  /// True when nothing is live and no finished utterance is still lingering
  /// at `t_ms`.
  bool idle_at(std::int64_t t_ms) const;

  const SchedulerOptions& options() const noexcept { return options_; }

 private:
  struct Utterance {
    HypothesisEvent latest;
    std::optional<std::int64_t> finalized_at;
  };

  const Tagger& tagger_;
  const Lexicon& lexicon_;
  SchedulerOptions options_;
  std::optional<Utterance> current_;
  std::int64_t last_event_ms_ = 0;
  std::optional<std::int64_t> last_tick_ms_;
  std::uint64_t next_seq_ = 1;
};

struct LiveOptions {
  SchedulerOptions schedule;
  double scale = 1.0;
};

using FrameSink = std::function<void(const StyledFrame&)>;

/// Replays `script` on one thread and schedules frames on the calling
/// thread, reading `settings` once per tick. Returns when the script is
/// exhausted and the screen has cleared, or when `stop` is requested.
void run_live(const ReplayScript& script, const LiveOptions& options, const SettingsSlot& settings,
              const Tagger& tagger, const Lexicon& lexicon, const FrameSink& sink, std::stop_token stop = {});

}  // namespace dynamik
