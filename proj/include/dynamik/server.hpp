#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "dynamik/scheduler.hpp"
#include "dynamik/style.hpp"

namespace dynamik {

struct ServerOptions {
  /// 0 picks an ephemeral port; see FrameServer::port().
  std::uint16_t port = 0;
  std::string bind_address = "0.0.0.0";
  /// Messages queued per client before it is dropped as too slow.
  std::size_t max_pending = 256;
  /// A client that says nothing for this long is a raw TCP client; one that
  /// opens with "GET " is upgraded to WebSocket.
  std::chrono::milliseconds sniff_timeout{150};
  /// Diagnostics (disconnect reasons, rejected controls). Defaults to stderr.
  std::function<void(const std::string&)> log;
};

/// Broadcasts frame messages to every connected client and applies control
/// messages from any of them to a SettingsSlot.
///
/// Each client gets a reader thread (handshake, control messages) and a
/// writer thread draining its own bounded queue, so a stalled client only
/// ever blocks itself.
class FrameServer {
 public:
  FrameServer(ServerOptions options, SettingsSlot& settings);
  ~FrameServer();

  FrameServer(const FrameServer&) = delete;
  FrameServer& operator=(const FrameServer&) = delete;

  /// Binds and starts accepting. Throws Error when the port is unavailable.
  void start();
  void stop();

  std::uint16_t port() const;

  /// Sends one frame message to every client that has finished connecting.
  void broadcast(const StyledFrame& frame);
  void broadcast_message(const std::string& message);

  /// Clients currently able to receive broadcasts.
  std::size_t client_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dynamik
