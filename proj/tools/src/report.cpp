#include "k3lat/cli/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "k3lat/version.hpp"

namespace k3lat::cli {

using nlohmann::json;

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flagged: return "flagged";
  }
  return "?";
}

namespace {

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "flagged") return Status::Flagged;
  throw std::runtime_error("unknown status '" + s + "'");
}

}  // namespace

std::size_t Report::count(Status status) const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.status == status ? 1 : 0;
  return n;
}

json class_to_json(const DivisorClass& d) {
  json coords = json::array();
  for (const auto& c : d.coords()) coords.push_back(to_string(c));
  return json{{"class", d.to_string()}, {"coords", coords}};
}

json certificate_to_json(const Certificate& certificate) {
  struct Visitor {
    json operator()(const Decomposition& d) const {
      json terms = json::array();
      for (const auto& t : d.terms) {
        json term = class_to_json(t.cls);
        term["multiplicity"] = to_string(t.multiplicity);
        terms.push_back(term);
      }
      return json{{"kind", "decomposition"}, {"terms", terms}};
    }
    json operator()(const WitnessClass& w) const {
      json out{{"kind", "witness"}, {"role", w.role}};
      if (w.cls.lattice()) out["witness"] = class_to_json(w.cls);
      else out["witness"] = nullptr;
      return out;
    }
    json operator()(const Exhausted& e) const {
      return json{{"kind", "exhausted"},
                  {"search", e.search},
                  {"degree_bound", to_string(e.degree_bound)},
                  {"candidates", e.candidates}};
    }
    json operator()(const ReflectionChain& r) const {
      json roots = json::array();
      for (const auto& root : r.roots) roots.push_back(class_to_json(root));
      json out{{"kind", "reflection_chain"}, {"roots", roots}};
      out["result"] = r.result.lattice() ? class_to_json(r.result) : json(nullptr);
      return out;
    }
    json operator()(const Composite& c) const {
      json checks = json::array();
      for (const auto& sc : c.checks)
        checks.push_back(json{{"name", sc.name},
                              {"verdict", sc.decision.verdict},
                              {"reason", sc.decision.reason},
                              {"certificate", certificate_to_json(sc.decision.certificate)}});
      return json{{"kind", "composite"}, {"checks", checks}};
    }
  };
  return std::visit(Visitor{}, certificate);
}

json to_json(const Report& report) {
  json assertions = json::array();
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    const Outcome& o = report.outcomes[i];
    json a{{"index", i},
           {"id", o.id},
           {"text", o.text},
           {"status", to_string(o.status)},
           {"expected", o.expected},
           {"actual", o.actual},
           {"certificate", o.certificate},
           {"certificate_summary", o.certificate_summary},
           {"notes", o.notes}};
    if (report.timing) a["wall_time_ms"] = o.wall_time_ms;
    assertions.push_back(std::move(a));
  }
  json bounds{{"max_degree", report.max_degree ? json(to_string(*report.max_degree)) : json(nullptr)}};
  json summary{{"total", report.outcomes.size()},
               {"pass", report.count(Status::Pass)},
               {"fail", report.count(Status::Fail)},
               {"flagged", report.count(Status::Flagged)}};
  return json{{"schema", kReportSchema}, {"engine_version", kVersion}, {"source", report.source},
              {"timing", report.timing}, {"bounds", bounds},   {"assertions", assertions},
              {"summary", summary}};
}

Report report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kReportSchema) throw std::runtime_error("unsupported report schema");
  Report r;
  r.source = j.at("source").get<std::string>();
  r.timing = j.at("timing").get<bool>();
  const json& md = j.at("bounds").at("max_degree");
  if (!md.is_null()) r.max_degree = parse_integer(md.get<std::string>());
  for (const json& a : j.at("assertions")) {
    Outcome o;
    o.id = a.at("id").get<std::string>();
    o.text = a.at("text").get<std::string>();
    o.status = status_from_string(a.at("status").get<std::string>());
    o.expected = a.at("expected").get<std::string>();
    o.actual = a.at("actual").get<std::string>();
    o.certificate = a.at("certificate");
    o.certificate_summary = a.at("certificate_summary").get<std::string>();
    o.notes = a.at("notes").get<std::vector<std::string>>();
    if (r.timing) o.wall_time_ms = a.at("wall_time_ms").get<double>();
    r.outcomes.push_back(std::move(o));
  }
  const json& s = j.at("summary");
  if (s.at("total").get<std::size_t>() != r.outcomes.size() ||
      s.at("pass").get<std::size_t>() != r.count(Status::Pass) ||
      s.at("fail").get<std::size_t>() != r.count(Status::Fail) ||
      s.at("flagged").get<std::size_t>() != r.count(Status::Flagged))
    throw std::runtime_error("summary counts disagree with the assertion list");
  return r;
}

void emit_text(const Report& report, std::ostream& os) {
  os << "k3lat " << kVersion << "  source: " << report.source << "  max degree: "
     << (report.max_degree ? to_string(*report.max_degree) : std::string("none")) << "\n";
  for (const auto& o : report.outcomes) {
    const char* tag = o.status == Status::Pass ? "[pass]   " : o.status == Status::Fail ? "[FAIL]   " : "[flagged]";
    os << tag << " " << o.id << ": " << o.text;
    if (report.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", o.wall_time_ms);
      os << "  (" << buf << " ms)";
    }
    os << "\n";
    if (o.status != Status::Pass) os << "          expected " << o.expected << ", got " << o.actual << "\n";
    if (!o.certificate_summary.empty()) os << "          certificate: " << o.certificate_summary << "\n";
    for (const auto& n : o.notes) os << "          note: " << n << "\n";
  }
  os << "summary: " << report.outcomes.size() << " checks, " << report.count(Status::Pass) << " pass, "
     << report.count(Status::Fail) << " fail, " << report.count(Status::Flagged) << " flagged\n";
}

void emit_json(const Report& report, std::ostream& os) { os << to_json(report).dump(2) << "\n"; }

}  // namespace k3lat::cli
