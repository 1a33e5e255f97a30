#include "dynamik/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <iostream>
#include <list>
#include <mutex>
#include <thread>

#include "dynamik/error.hpp"
#include "dynamik/wire.hpp"
#include "websocket.hpp"

namespace dynamik {
namespace {

constexpr std::size_t kMaxRequestHead = 16 * 1024;

bool send_all(int fd, std::string_view bytes) {
  while (!bytes.empty()) {
    const auto n = ::send(fd, bytes.data(), bytes.size(), MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return false;
    bytes.remove_prefix(static_cast<std::size_t>(n));
  }
  return true;
}

struct Client {
  explicit Client(int socket, std::uint64_t client_id) : fd(socket), id(client_id) {}
  ~Client() {
    reader = {};
    writer = {};
    ::close(fd);
  }

  const int fd;
  const std::uint64_t id;
  bool websocket = false;  // fixed before `ready` is set

  std::atomic<bool> ready{false};
  std::atomic<bool> reader_done{false};
  std::atomic<bool> writer_done{false};

  std::mutex mutex;
  std::condition_variable cv;
  std::deque<std::string> outbox;
  bool closing = false;

  std::jthread reader;
  std::jthread writer;

  std::string encode(const std::string& message) const {
    // A WebSocket message is already delimited; raw TCP is one per line.
    return websocket ? websocket::encode_frame(websocket::Opcode::Text, message) : message + "\n";
  }
};

}  // namespace

struct FrameServer::Impl {
  Impl(ServerOptions opts, SettingsSlot& slot) : options(std::move(opts)), settings(slot) {
    if (!options.log) options.log = [](const std::string& line) { std::clog << "[dynamik] " << line << '\n'; };
  }

  ServerOptions options;
  SettingsSlot& settings;
  int listen_fd = -1;
  std::uint16_t bound_port = 0;
  std::atomic<bool> stopping{false};
  std::jthread acceptor;

  mutable std::mutex clients_mutex;
  std::list<std::shared_ptr<Client>> clients;
  std::uint64_t next_id = 1;

  // Control messages are applied one at a time so concurrent senders
  // cannot interleave read-modify-write on the settings.
  std::mutex control_mutex;

  void close_client(Client& c, const std::string& reason, bool abort = false) {
    {
      std::lock_guard lock(c.mutex);
      if (c.closing) return;
      c.closing = true;
    }
    if (abort) {
      // Whatever is still in the kernel buffer is stale; reset on close
      // instead of trickling it out to a peer that is not reading.
      const linger hard{1, 0};
      ::setsockopt(c.fd, SOL_SOCKET, SO_LINGER, &hard, sizeof hard);
    }
    ::shutdown(c.fd, SHUT_RDWR);
    c.cv.notify_all();
    options.log("client " + std::to_string(c.id) + " disconnected: " + reason);
  }

  void enqueue(Client& c, std::string bytes) {
    bool overflow = false;
    {
      std::lock_guard lock(c.mutex);
      if (c.closing) return;
      if (c.outbox.size() >= options.max_pending) {
        overflow = true;
      } else {
        c.outbox.push_back(std::move(bytes));
      }
    }
    if (overflow) {
      close_client(c, "send queue full (" + std::to_string(options.max_pending) + " messages), client too slow", true);
      return;
    }
    c.cv.notify_one();
  }

  void write_loop(Client& c) {
    for (;;) {
      std::string bytes;
      {
        std::unique_lock lock(c.mutex);
        c.cv.wait(lock, [&] { return c.closing || !c.outbox.empty(); });
        if (c.closing) break;
        bytes = std::move(c.outbox.front());
        c.outbox.pop_front();
      }
      if (!send_all(c.fd, bytes)) {
        close_client(c, "send failed");
        break;
      }
    }
    c.writer_done = true;
  }

  void handle_control(Client& c, std::string_view line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) return;
    try {
      const auto control = wire::parse_control(line);
      std::lock_guard lock(control_mutex);
      const auto current = settings.load();
      settings.store(wire::apply_control(*current, control));
    } catch (const Error& e) {
      options.log("client " + std::to_string(c.id) + " control rejected: " + e.what());
      enqueue(c, c.encode(wire::error_message(e.what())));
    }
  }

  void handle_lines(Client& c, std::string& pending) {
    std::size_t nl;
    while ((nl = pending.find('\n')) != std::string::npos) {
      handle_control(c, std::string_view(pending).substr(0, nl));
      pending.erase(0, nl + 1);
    }
  }

  // Waits for the first bytes to tell a browser from a raw TCP client.
  bool sniff(Client& c, std::string& head) {
    const auto deadline = std::chrono::steady_clock::now() + options.sniff_timeout;
    char buf[4];
    for (;;) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) return true;
      pollfd p{c.fd, POLLIN, 0};
      const int r = ::poll(&p, 1, static_cast<int>(left.count()));
      if (r == 0) return true;
      if (r < 0 && errno == EINTR) continue;
      if (r < 0) return false;
      const auto n = ::recv(c.fd, buf, sizeof buf, MSG_PEEK);
      if (n <= 0) return false;
      head.assign(buf, static_cast<std::size_t>(n));
      if (n >= 4 || std::string_view("GET ").substr(0, head.size()) != head) return true;
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
  }

  bool upgrade(Client& c, std::string& leftover) {
    std::string request;
    char buf[2048];
    while (request.find("\r\n\r\n") == std::string::npos) {
      if (request.size() > kMaxRequestHead) return false;
      const auto n = ::recv(c.fd, buf, sizeof buf, 0);
      if (n <= 0) return false;
      request.append(buf, static_cast<std::size_t>(n));
    }
    const auto end = request.find("\r\n\r\n") + 4;
    leftover = request.substr(end);
    request.resize(end);

    const auto upgrade_hdr = websocket::header_value(request, "Upgrade");
    const auto key = websocket::header_value(request, "Sec-WebSocket-Key");
    if (!upgrade_hdr || !key) {
      send_all(c.fd, "HTTP/1.1 400 Bad Request\r\nContent-Length: 0\r\nConnection: close\r\n\r\n");
      return false;
    }
    const std::string response =
        "HTTP/1.1 101 Switching Protocols\r\n"
        "Upgrade: websocket\r\n"
        "Connection: Upgrade\r\n"
        "Sec-WebSocket-Accept: " +
        websocket::accept_key(*key) + "\r\n\r\n";
    return send_all(c.fd, response);
  }

  void read_loop(Client& c) {
    std::string head;
    std::string buffer;
    if (!sniff(c, head)) {
      close_client(c, "closed during connect");
      c.reader_done = true;
      return;
    }
    if (head.rfind("GET ", 0) == 0) {
      if (!upgrade(c, buffer)) {
        close_client(c, "bad WebSocket handshake");
        c.reader_done = true;
        return;
      }
      c.websocket = true;
    }
    c.ready = true;

    std::string message;  // WebSocket text being reassembled
    std::string lines;    // raw TCP bytes not yet split
    char buf[4096];
    bool open = true;
    while (open) {
      if (c.websocket) {
        while (auto frame = websocket::decode_frame(buffer)) {
          using websocket::Opcode;
          if (frame->opcode == Opcode::Close) {
            enqueue(c, websocket::encode_frame(Opcode::Close, frame->payload.substr(0, 2)));
            open = false;
            break;
          }
          if (frame->opcode == Opcode::Ping) {
            enqueue(c, websocket::encode_frame(Opcode::Pong, frame->payload));
            continue;
          }
          if (frame->opcode == Opcode::Text || frame->opcode == Opcode::Continuation) {
            message += frame->payload;
            if (frame->fin) {
              message.push_back('\n');
              handle_lines(c, message);
              message.clear();
            }
          }
        }
        if (!open) break;
      } else {
        lines += buffer;
        buffer.clear();
        handle_lines(c, lines);
      }
      const auto n = ::recv(c.fd, buf, sizeof buf, 0);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) break;
      buffer.append(buf, static_cast<std::size_t>(n));
    }
    // Give a queued close frame a moment to leave before tearing down.
    if (c.websocket && !open) std::this_thread::sleep_for(std::chrono::milliseconds(20));
    close_client(c, "peer closed connection");
    c.reader_done = true;
  }

  void reap() {
    std::lock_guard lock(clients_mutex);
    clients.remove_if([](const std::shared_ptr<Client>& c) { return c->reader_done && c->writer_done; });
  }

  void accept_loop(std::stop_token stop) {
    while (!stop.stop_requested() && !stopping) {
      pollfd p{listen_fd, POLLIN, 0};
      const int r = ::poll(&p, 1, 100);
      reap();
      if (r <= 0) continue;
      const int fd = ::accept(listen_fd, nullptr, nullptr);
      if (fd < 0) continue;
      const int one = 1;
      ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);

      std::lock_guard lock(clients_mutex);
      auto client = std::make_shared<Client>(fd, next_id++);
      Client& ref = *client;
      client->writer = std::jthread([this, &ref] { write_loop(ref); });
      client->reader = std::jthread([this, &ref] { read_loop(ref); });
      clients.push_back(std::move(client));
    }
  }
};

FrameServer::FrameServer(ServerOptions options, SettingsSlot& settings)
    : impl_(std::make_unique<Impl>(std::move(options), settings)) {}

FrameServer::~FrameServer() { stop(); }

void FrameServer::start() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw Error(std::string("socket: ") + std::strerror(errno));
  const int one = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(impl_->options.port);
  if (::inet_pton(AF_INET, impl_->options.bind_address.c_str(), &addr.sin_addr) != 1) {
    ::close(fd);
    throw Error("invalid bind address " + impl_->options.bind_address);
  }
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd, 64) != 0) {
    const std::string reason = std::strerror(errno);
    ::close(fd);
    throw Error("cannot listen on port " + std::to_string(impl_->options.port) + ": " + reason);
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  impl_->bound_port = ntohs(addr.sin_port);
  impl_->listen_fd = fd;
  impl_->stopping = false;
  impl_->acceptor = std::jthread([impl = impl_.get()](std::stop_token st) { impl->accept_loop(st); });
}

void FrameServer::stop() {
  if (!impl_ || impl_->listen_fd < 0) return;
  impl_->stopping = true;
  impl_->acceptor = {};
  ::close(impl_->listen_fd);
  impl_->listen_fd = -1;

  std::list<std::shared_ptr<Client>> doomed;
  {
    std::lock_guard lock(impl_->clients_mutex);
    doomed.swap(impl_->clients);
  }
  for (auto& c : doomed) impl_->close_client(*c, "server stopping");
  doomed.clear();
}

std::uint16_t FrameServer::port() const { return impl_->bound_port; }

void FrameServer::broadcast(const StyledFrame& frame) { broadcast_message(wire::frame_message(frame)); }

void FrameServer::broadcast_message(const std::string& message) {
  std::lock_guard lock(impl_->clients_mutex);
  // Encode once per transport so every client of a kind gets the same bytes.
  std::optional<std::string> raw, ws;
  for (auto& c : impl_->clients) {
    if (!c->ready) continue;
    auto& cached = c->websocket ? ws : raw;
    if (!cached) cached = c->encode(message);
    impl_->enqueue(*c, *cached);
  }
}

std::size_t FrameServer::client_count() const {
  std::lock_guard lock(impl_->clients_mutex);
  std::size_t n = 0;
  for (const auto& c : impl_->clients)
    if (c->ready && !c->reader_done) ++n;
  return n;
}

}  // namespace dynamik
