#pragma once

// Local HTTP+JSON session service. Each session holds one composition
// request; pragṛhya questions are asked once per word pair and the search
// runs when the last one is answered.
//
//   POST /sessions                  {prose, spelled?, mode?, max_permutations?, families?}
//   GET  /sessions/{id}
//   POST /sessions/{id}/answers     {question | left+right, dual}  or  {answers: [...]}
//   GET  /sessions/{id}/result
//   POST /scan                      {lines: [...]} or {text}

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"
#include "padya/catalog.h"
#include "padya/composer.h"

namespace httplib {
class Server;
}

namespace padya {

enum class SessionState { kAwaitingAnswers, kRunning, kDone };
const char* to_string(SessionState s);

struct Session {
  std::string id;
  CompositionRequest request;
  SessionState state = SessionState::kAwaitingAnswers;
  std::vector<PendingQuestion> questions;  // every question ever asked, in order
  std::optional<CompositionResult> result;
  std::mutex mutex;
};

struct ServiceReply {
  int status = 200;
  nlohmann::json body;
};

class Service {
 public:
  explicit Service(const Catalog& catalog) : catalog_(&catalog), composer_(catalog) {}

  ServiceReply create_session(const std::string& body);
  ServiceReply get_session(const std::string& id);
  ServiceReply answer(const std::string& id, const std::string& body);
  ServiceReply result(const std::string& id);
  ServiceReply scan(const std::string& body);

  // Registers the routes above on `server`.
  void mount(httplib::Server& server);

 private:
  std::shared_ptr<Session> find(const std::string& id);
  nlohmann::json describe(Session& s) const;
  void run(Session& s);

  const Catalog* catalog_;
  Composer composer_;
  std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<std::uint64_t> next_id_{1};
};

// Parses a request document; throws Error(kInvalidArgument) naming the field.
CompositionRequest parse_request(const nlohmann::json& doc);

// Blocks serving on 127.0.0.1:port until the process is stopped.
int serve(const Catalog& catalog, int port);

}  // namespace padya
