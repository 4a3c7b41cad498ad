#include "emolex/tasker/http_api.hpp"

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "emolex/util/error.hpp"

namespace emolex::tasker {

namespace {

using nlohmann::json;

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
      return 400;
    case ErrorKind::not_found:
      return 404;
    case ErrorKind::conflict:
      return 409;
    case ErrorKind::rejected:
      return 422;
    default:
      return 500;
  }
}

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

json assignment_json(const TaskAssignment& task, const Tasker& tasker) {
  const auto& group = tasker.group(task.group_id);
  json j{{"worker", task.worker_id},
         {"group", task.group_id},
         {"kind", to_string(task.kind)},
         {"issued_at", format_timestamp(task.issued_at)},
         {"terms", group.terms},
         {"dictionary_link", group.dictionary_link}};
  if (task.evaluation_kind) {
    j["evaluation_kind"] = evalkit::to_string(*task.evaluation_kind);
    if (auto t = tasker.evaluation_task(task.group_id, *task.evaluation_kind)) j["summary"] = t->summary;
  }
  return j;
}

json status_json(const WorkerStatus& s, const Tasker& tasker) {
  json j{{"worker", s.worker_id},
         {"evaluator_kind", evalkit::to_string(s.evaluator_kind)},
         {"gate", to_string(s.gate)},
         {"assessment", {{"answered", s.assessment_answered},
                         {"required", s.assessment_required},
                         {"correct", s.assessment_correct}}},
         {"acquisition", {{"count", s.acquisition_count}, {"cap", s.cap}}},
         {"evaluations", s.evaluation_count}};
  j["outstanding"] = s.outstanding ? assignment_json(*s.outstanding, tasker) : json(nullptr);
  return j;
}

json parse_body(const httplib::Request& req) {
  try {
    auto body = json::parse(req.body);
    if (!body.is_object()) throw InvalidArgumentError("request body must be a JSON object");
    return body;
  } catch (const json::parse_error& e) {
    throw InvalidArgumentError(std::string("invalid JSON body: ") + e.what());
  }
}

std::string require_string(const json& body, const char* field) {
  const auto it = body.find(field);
  if (it == body.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw InvalidArgumentError(std::string("missing string field '") + field + "'");
  }
  return it->get<std::string>();
}

template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    reply(res, status_for(e.kind()), json{{"error", e.what()}});
  } catch (const json::exception& e) {
    reply(res, 400, json{{"error", e.what()}});
  } catch (const std::exception& e) {
    reply(res, 500, json{{"error", e.what()}});
  }
}

}  // namespace

struct ApiServer::Impl {
  Tasker& tasker;
  LexiconCsv lexicon_csv;
  httplib::Server server;
  std::thread thread;

  Impl(Tasker& t, LexiconCsv csv) : tasker(t), lexicon_csv(std::move(csv)) {}

  void routes() {
    server.Post("/api/worker", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = parse_body(req);
        const auto worker = require_string(body, "worker");
        auto kind = evalkit::EvaluatorKind::crowd;
        if (body.contains("kind")) {
          const auto parsed = evalkit::parse_evaluator_kind(body.at("kind").get<std::string>());
          if (!parsed) throw InvalidArgumentError("kind must be 'crowd' or 'expert'");
          kind = *parsed;
        }
        tasker.register_worker(worker, kind);
        reply(res, 201, status_json(tasker.status(worker), tasker));
      });
    });

    server.Get("/api/task", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        if (!req.has_param("worker")) throw InvalidArgumentError("missing query parameter 'worker'");
        const auto worker = req.get_param_value("worker");
        const bool evaluation = req.has_param("kind") && req.get_param_value("kind") == "evaluation";
        const auto next = evaluation ? tasker.next_evaluation_task(worker) : tasker.next_task(worker);
        if (next.task) {
          reply(res, 200, json{{"status", "task"}, {"task", assignment_json(*next.task, tasker)}});
        } else {
          reply(res, 200, json{{"status", "exhausted"}, {"reason", to_string(*next.exhausted)}});
        }
      });
    });

    server.Post("/api/annotation", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = parse_body(req);
        const auto worker = require_string(body, "worker");
        const auto group = require_string(body, "group");
        const auto subclass = parse_subclass(require_string(body, "subclass"));
        if (!subclass) throw InvalidArgumentError("unknown subclass");
        const auto result = tasker.submit(worker, group, *subclass);
        reply(res, 200,
              json{{"accepted", true},
                   {"kind", to_string(result.kind)},
                   {"subclass", to_string(result.subclass)},
                   {"main_class", to_string(result.main_class)},
                   {"status", status_json(result.status, tasker)}});
      });
    });

    server.Get(R"(/api/worker/([^/]+)/status)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { reply(res, 200, status_json(tasker.status(req.matches[1]), tasker)); });
    });

    server.Get(R"(/api/groups/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto& g = tasker.group(std::string(req.matches[1]));
        reply(res, 200,
              json{{"id", g.id}, {"stem", g.stem}, {"terms", g.terms}, {"dictionary_link", g.dictionary_link}});
      });
    });

    server.Post("/api/evaluation", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = parse_body(req);
        const auto worker = require_string(body, "worker");
        const auto group = require_string(body, "group");
        std::optional<int> score;
        std::optional<bool> valid;
        if (body.contains("score")) {
          if (!body.at("score").is_number_integer()) throw InvalidArgumentError("score must be an integer");
          score = body.at("score").get<int>();
        }
        if (body.contains("intensifier_valid")) {
          if (!body.at("intensifier_valid").is_boolean()) {
            throw InvalidArgumentError("intensifier_valid must be a boolean");
          }
          valid = body.at("intensifier_valid").get<bool>();
        }
        const auto record = tasker.submit_evaluation(worker, group, score, valid);
        reply(res, 200, json{{"accepted", true}, {"record", json::parse(evalkit::serialize_record(record))}});
      });
    });

    server.Get("/api/lexicon.csv", [this](const httplib::Request&, httplib::Response& res) {
      guarded(res, [&] { res.set_content(lexicon_csv(), "text/csv"); });
    });

    server.Get("/api/subclasses", [](const httplib::Request&, httplib::Response& res) {
      json out = json::array();
      for (const auto s : kAllSubclasses) {
        out.push_back({{"name", to_string(s)},
                       {"index", subclass_index(s)},
                       {"main_class", to_string(main_class_of(s))}});
      }
      reply(res, 200, out);
    });
  }
};

ApiServer::ApiServer(Tasker& tasker, LexiconCsv lexicon_csv, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>(tasker, std::move(lexicon_csv))) {
  impl_->routes();
  if (static_dir && !impl_->server.set_mount_point("/", static_dir->string())) {
    throw ConfigError("static asset directory '" + static_dir->string() + "' does not exist");
  }
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw IoError("cannot bind " + host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void ApiServer::wait() {
  if (impl_->thread.joinable()) impl_->thread.join();
}

void ApiServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace emolex::tasker
