#pragma once

#include <map>
#include <mutex>
#include <string>

#include "json_codec.hpp"

namespace httplib {
class Server;
}

namespace tsol::api {

struct Response {
  int status = 200;
  codec::json body;
};

// Request handlers for the JSON API, independent of the HTTP transport.
class Service {
 public:
  // Largest vertex cap a client may ask for on /api/orbit-count.
  static constexpr std::size_t kMaxOrbitCap = 1'000'000;
  static constexpr std::size_t kDefaultOrbitCap = 200'000;

  Response handle(const std::string& method, const std::string& path, const std::string& body,
                  const std::map<std::string, std::string>& query = {});

  // Registers every route on the server, plus a static mount if dir is nonempty.
  void install(httplib::Server& server, const std::string& static_dir = "");

 private:
  Response dispatch(const std::string& method, const std::string& path, const codec::json& body,
                    const std::map<std::string, std::string>& query);

  std::mutex session_mutex_;
  std::map<std::string, Pattern> sessions_;
};

}  // namespace tsol::api
