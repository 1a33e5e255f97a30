#include "dynamik/scheduler.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <thread>
#include <vector>

#include "dynamik/error.hpp"
#include "dynamik/tokenize.hpp"

namespace dynamik {

SettingsSlot::SettingsSlot(Settings initial) {
  initial.style.validate();
  current_ = std::make_shared<const Settings>(std::move(initial));
}

std::shared_ptr<const Settings> SettingsSlot::load() const {
  std::lock_guard lock(mutex_);
  return current_;
}

void SettingsSlot::store(Settings next) {
  next.style.validate();
  auto fresh = std::make_shared<const Settings>(std::move(next));
  std::lock_guard lock(mutex_);
  current_ = std::move(fresh);
}

FrameScheduler::FrameScheduler(const Tagger& tagger, const Lexicon& lexicon, SchedulerOptions options)
    : tagger_(tagger), lexicon_(lexicon), options_(options) {
  if (options_.refresh_ms <= 0) throw ValidationError("refresh_ms must be positive");
  if (options_.linger_ms < 0) throw ValidationError("linger_ms must be >= 0");
}

void FrameScheduler::push(const HypothesisEvent& event) {
  if (event.t_ms < last_event_ms_) throw ValidationError("hypothesis events out of time order");
  last_event_ms_ = event.t_ms;

  // A hypothesis after a final one opens a new utterance, replacing the
  // lingering one on screen.
  current_ = Utterance{event, std::nullopt};
  if (event.is_final) current_->finalized_at = event.t_ms;
}

void FrameScheduler::end_of_input() {
  if (current_ && !current_->finalized_at) current_->finalized_at = current_->latest.t_ms;
}

bool FrameScheduler::idle_at(std::int64_t t_ms) const {
  if (!current_) return true;
  if (!current_->finalized_at) return false;
  return t_ms >= *current_->finalized_at + options_.linger_ms;
}

std::optional<StyledFrame> FrameScheduler::tick(std::int64_t t_ms, const Settings& settings) {
  if (last_tick_ms_ && t_ms <= *last_tick_ms_) throw ValidationError("ticks must move forward in time");
  last_tick_ms_ = t_ms;

  if (current_ && current_->finalized_at && t_ms > *current_->finalized_at + options_.linger_ms)
    current_.reset();
  if (!current_) return std::nullopt;

  const auto started = std::chrono::steady_clock::now();
  auto tokens = tokenize(current_->latest.text);
  for (auto& token : tokens) token.time_ms = current_->latest.t_ms;
  const auto classified = classify_tokens(tokens, tagger_, lexicon_);

  StyledFrame frame;
  frame.seq = next_seq_++;
  frame.t_ms = t_ms;
  frame.mode = settings.mode;
  frame.cues = apply_mode(classified, settings.mode, settings.style);
  frame.analysis =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
  frame.overrun = frame.analysis >= std::chrono::milliseconds(options_.refresh_ms);
  return frame;
}

namespace {

// Ordered hand-off from the replay thread to the scheduler. take_through(t)
// waits until the producer has promised that no more events at or before t
// are coming.
class EventQueue {
 public:
  void push(const HypothesisEvent& e) {
    {
      std::lock_guard lock(mutex_);
      events_.push_back(e);
      horizon_ = std::max(horizon_, e.t_ms);
    }
    cv_.notify_all();
  }

  void advance(std::int64_t horizon) {
    {
      std::lock_guard lock(mutex_);
      horizon_ = std::max(horizon_, horizon);
    }
    cv_.notify_all();
  }

  void close() {
    {
      std::lock_guard lock(mutex_);
      closed_ = true;
    }
    cv_.notify_all();
  }

  std::vector<HypothesisEvent> take_through(std::int64_t t_ms, std::stop_token stop) {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, stop, [&] { return closed_ || horizon_ >= t_ms; });
    std::vector<HypothesisEvent> out;
    while (!events_.empty() && events_.front().t_ms <= t_ms) {
      out.push_back(std::move(events_.front()));
      events_.pop_front();
    }
    return out;
  }

  bool drained() const {
    std::lock_guard lock(mutex_);
    return closed_ && events_.empty();
  }

 private:
  mutable std::mutex mutex_;
  std::condition_variable_any cv_;
  std::deque<HypothesisEvent> events_;
  std::int64_t horizon_ = -1;
  bool closed_ = false;
};

}  // namespace

void run_live(const ReplayScript& script, const LiveOptions& options, const SettingsSlot& settings,
              const Tagger& tagger, const Lexicon& lexicon, const FrameSink& sink, std::stop_token stop) {
  FrameScheduler scheduler(tagger, lexicon, options.schedule);
  ReplayClock clock(options.scale);
  clock.start();

  EventQueue queue;
  std::jthread ingest([&](std::stop_token inner) {
    replay(script, clock,
           ReplayHandlers{[&](const HypothesisEvent& e) { queue.push(e); },
                          [&](std::int64_t h) { queue.advance(h); }},
           inner);
    queue.close();
  });
  std::stop_callback forward(stop, [&] { ingest.request_stop(); });

  const auto refresh = options.schedule.refresh_ms;
  for (std::int64_t tick = refresh;; tick += refresh) {
    if (!clock.sleep_until(tick, stop)) break;
    for (const auto& e : queue.take_through(tick, stop)) scheduler.push(e);
    if (stop.stop_requested()) break;

    const bool input_done = queue.drained();
    if (input_done) scheduler.end_of_input();

    const auto snapshot = settings.load();
    if (auto frame = scheduler.tick(tick, *snapshot)) {
      // Woken after the following tick was due: the frame is late.
      if (!clock.is_virtual() && ReplayClock::WallClock::now() > clock.wall_time(tick + refresh))
        frame->overrun = true;
      sink(*frame);
    }
    if (input_done && scheduler.idle_at(tick)) break;
  }
}

}  // namespace dynamik
