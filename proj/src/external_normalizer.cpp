// Copyright 2026 The luxnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "luxnorm/external_normalizer.hpp"

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <utility>

#include "luxnorm/errors.hpp"
#include "luxnorm/text_io.hpp"

extern char** environ;

namespace luxnorm {
namespace {

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  Fd(Fd&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  Fd& operator=(Fd&& other) noexcept {
    if (this != &other) {
      reset();
      fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
  }
  ~Fd() { reset(); }

  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

struct Pipe {
  Fd read;
  Fd write;
};

Pipe make_pipe() {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) {
    throw ProtocolError(std::string("pipe: ") + std::strerror(errno));
  }
  return {Fd(fds[0]), Fd(fds[1])};
}

void write_all(int fd, const std::string& data) {
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      return;  // EPIPE: the child stopped reading; its exit status tells why
    }
    off += static_cast<std::size_t>(n);
  }
}

std::string tail(const std::string& s, std::size_t max_bytes = 2000) {
  return s.size() <= max_bytes ? s : "..." + s.substr(s.size() - max_bytes);
}

}  // namespace

std::vector<std::string> run_external_normalizer(const std::string& command,
                                                 std::span<const std::string> sentences) {
  std::string input;
  for (const std::string& s : sentences) {
    if (s.find('\n') != std::string::npos) {
      throw std::invalid_argument("sentence contains a line break");
    }
    input += s;
    input += '\n';
  }
  if (sentences.empty()) return {};

  Pipe to_child = make_pipe();
  Pipe from_child = make_pipe();
  Pipe err_child = make_pipe();

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, to_child.read.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, from_child.write.get(), STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, err_child.write.get(), STDERR_FILENO);

  const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
  pid_t pid = 0;
  const int rc = ::posix_spawn(&pid, "/bin/sh", &actions, nullptr,
                               const_cast<char* const*>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    throw ProtocolError("cannot start '" + command + "': " + std::strerror(rc));
  }
  to_child.read.reset();
  from_child.write.reset();
  err_child.write.reset();

  // A blocked writer must not stall the reader, and vice versa.
  std::signal(SIGPIPE, SIG_IGN);
  std::thread writer([fd = std::move(to_child.write), &input]() mutable {
    write_all(fd.get(), input);
    fd.reset();
  });

  std::string out;
  std::string err;
  pollfd fds[2] = {{from_child.read.get(), POLLIN, 0}, {err_child.read.get(), POLLIN, 0}};
  int open_streams = 2;
  char buf[65536];
  while (open_streams > 0) {
    if (::poll(fds, 2, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int k = 0; k < 2; ++k) {
      if (fds[k].fd < 0 || fds[k].revents == 0) continue;
      const ssize_t n = ::read(fds[k].fd, buf, sizeof(buf));
      if (n > 0) {
        (k == 0 ? out : err).append(buf, static_cast<std::size_t>(n));
      } else if (n == 0 || errno != EINTR) {
        fds[k].fd = -1;
        --open_streams;
      }
    }
  }
  writer.join();

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const std::string how = WIFEXITED(status)
                                ? "exited with status " + std::to_string(WEXITSTATUS(status))
                                : "was killed by signal " + std::to_string(WTERMSIG(status));
    throw ProtocolError("external normalizer '" + command + "' " + how +
                        (err.empty() ? "" : "; stderr: " + tail(err)));
  }

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < out.size()) {
    std::size_t nl = out.find('\n', start);
    if (nl == std::string::npos) nl = out.size();
    std::string line = out.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  if (lines.size() != sentences.size()) {
    throw ProtocolError("external normalizer '" + command + "' returned " +
                        std::to_string(lines.size()) + " lines, expected " +
                        std::to_string(sentences.size()));
  }
  return lines;
}

std::vector<std::string> read_predictions(const std::filesystem::path& path,
                                          std::size_t expected_count) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.size() != expected_count) {
    throw ProtocolError(path.string() + ": " + std::to_string(lines.size()) +
                        " prediction lines, expected " + std::to_string(expected_count));
  }
  return lines;
}

std::string ExternalNormalizer::normalize(const std::string& sentence) const {
  return run_external_normalizer(command_, std::span<const std::string>(&sentence, 1)).front();
}

std::vector<std::string> ExternalNormalizer::normalize_batch(
    std::span<const std::string> sentences, std::size_t) const {
  return run_external_normalizer(command_, sentences);
}

}  // namespace luxnorm
