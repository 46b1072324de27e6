#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "polartree.h"
#include "polartree/fixtures.hpp"
#include "polartree/parser.hpp"
#include "polartree/session.hpp"

using namespace polartree;

struct pt_session {
    CommandInput input;
    std::string error;
    std::string error_code;
};

namespace {

pt_status status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::NegativeExponentWithoutLaurent:
            return PT_ERR_SYNTAX;
        case ErrorCode::FieldTooSmall:
        case ErrorCode::UnresolvedBranch:
            return PT_ERR_FIELD;
        case ErrorCode::Indeterminate:
        case ErrorCode::TruncationTooShort:
        case ErrorCode::TruncationBudgetExceeded:
        case ErrorCode::PlacementUnresolved:
            return PT_ERR_TRUNCATION;
        case ErrorCode::NoCover:
        case ErrorCode::NoPostbar:
        case ErrorCode::InternalInconsistency:
            return PT_ERR_INTERNAL;
        default:
            return PT_ERR_INPUT;
    }
}

template <class F>
pt_status guarded(pt_session* s, F&& body) {
    if (!s) return PT_ERR_NULL;
    s->error.clear();
    s->error_code.clear();
    try {
        return body();
    } catch (const Error& e) {
        s->error = e.what();
        s->error_code = error_code_name(e.code());
        return status_for(e.code());
    } catch (const std::bad_alloc&) {
        s->error = "out of memory";
        s->error_code = "OutOfMemory";
        return PT_ERR_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        s->error = e.what();
        s->error_code = "InternalInconsistency";
        return PT_ERR_INTERNAL;
    }
}

pt_status bad_argument(pt_session* s, const std::string& msg) {
    s->error = msg;
    s->error_code = "InvalidArgument";
    return PT_ERR_ARGUMENT;
}

PairInput* slot_of(pt_session* s, int slot) {
    if (slot == PT_FIRST) return &s->input.first;
    if (slot == PT_SECOND) {
        if (!s->input.second) s->input.second.emplace();
        return &*s->input.second;
    }
    return nullptr;
}

std::vector<std::string> split_roots(const char* text) {
    std::vector<std::string> out;
    std::string cur;
    for (const char* p = text; *p; ++p) {
        if (*p == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += *p;
        }
    }
    if (cur.find_first_not_of(" \t\n") != std::string::npos || !out.empty()) out.push_back(cur);
    for (const auto& r : out)
        if (r.find_first_not_of(" \t\n") == std::string::npos) fail(ErrorCode::SyntaxError, "empty root in list");
    return out;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

pt_session* pt_session_create(void) { return new (std::nothrow) pt_session(); }

void pt_session_destroy(pt_session* session) { delete session; }

pt_status pt_set_pair(pt_session* session, int slot, const char* f, const char* g) {
    return guarded(session, [&] {
        PairInput* p = slot_of(session, slot);
        if (!p) return bad_argument(session, "slot must be PT_FIRST or PT_SECOND");
        if (!f || !g) return bad_argument(session, "f and g must not be null");
        *p = PairInput{};
        p->f = f;
        p->g = g;
        return PT_OK;
    });
}

pt_status pt_set_roots(pt_session* session, int slot, const char* f_roots, const char* g_roots, int e1, int e2) {
    return guarded(session, [&] {
        PairInput* p = slot_of(session, slot);
        if (!p) return bad_argument(session, "slot must be PT_FIRST or PT_SECOND");
        if (!f_roots || !g_roots) return bad_argument(session, "root lists must not be null");
        if (e1 < 0 || e2 < 0) return bad_argument(session, "E1 and E2 must be non-negative");
        *p = PairInput{};
        p->roots = RootLists{split_roots(f_roots), split_roots(g_roots), e1, e2};
        return PT_OK;
    });
}

pt_status pt_set_fixture(pt_session* session, int slot, const char* name) {
    return guarded(session, [&] {
        PairInput* p = slot_of(session, slot);
        if (!p) return bad_argument(session, "slot must be PT_FIRST or PT_SECOND");
        if (!name) return bad_argument(session, "fixture name must not be null");
        fixture(name);
        *p = PairInput{};
        p->fixture = name;
        return PT_OK;
    });
}

pt_status pt_set_field(pt_session* session, int conductor) {
    return guarded(session, [&] {
        if (conductor < 0) return bad_argument(session, "field conductor must be non-negative");
        session->input.options.field = conductor;
        return PT_OK;
    });
}

pt_status pt_set_trunc(pt_session* session, const char* trunc) {
    return guarded(session, [&] {
        if (!trunc) {
            session->input.options.trunc.reset();
            return PT_OK;
        }
        Cyclo c = parse_constant(trunc);
        if (!c.is_rational() || c.rational_part() <= 0) return bad_argument(session, "truncation must be a positive rational");
        session->input.options.trunc = c.rational_part();
        return PT_OK;
    });
}

pt_status pt_set_laurent(pt_session* session, int enabled) {
    return guarded(session, [&] {
        session->input.options.laurent = enabled != 0;
        return PT_OK;
    });
}

pt_status pt_set_shift(pt_session* session, const char* c) {
    return guarded(session, [&] {
        if (c) {
            session->input.options.shift = std::string(c);
        } else {
            session->input.options.shift.reset();
        }
        return PT_OK;
    });
}

pt_status pt_set_s(pt_session* session, int s) {
    return guarded(session, [&] {
        if (s < 0) {
            session->input.options.s.reset();
        } else {
            session->input.options.s = s;
        }
        return PT_OK;
    });
}

pt_status pt_run(pt_session* session, const char* command, char** json, char** text) {
    return guarded(session, [&] {
        if (!command) return bad_argument(session, "command must not be null");
        if (json) *json = nullptr;
        if (text) *text = nullptr;
        CommandResult r = run_command(command, session->input);
        if (json) *json = dup(r.json);
        if (text) {
            try {
                *text = dup(r.text);
            } catch (...) {
                if (json) {
                    std::free(*json);
                    *json = nullptr;
                }
                throw;
            }
        }
        return r.exit_code == 0 ? PT_OK : PT_VERIFICATION_FAILED;
    });
}

const char* pt_last_error(const pt_session* session) { return session ? session->error.c_str() : "null session"; }

const char* pt_last_error_code(const pt_session* session) { return session ? session->error_code.c_str() : ""; }

void pt_string_free(char* s) { std::free(s); }

int pt_exit_code(pt_status status) {
    switch (status) {
        case PT_OK:
            return 0;
        case PT_VERIFICATION_FAILED:
        case PT_ERR_INTERNAL:
        case PT_ERR_OUT_OF_MEMORY:
            return 1;
        case PT_ERR_FIELD:
        case PT_ERR_TRUNCATION:
            return 3;
        default:
            return 2;
    }
}

const char* pt_version(void) { return "1.0.0"; }

size_t pt_fixture_count(void) { return fixtures().size(); }

const char* pt_fixture_name(size_t index) { return index < fixtures().size() ? fixtures()[index].name.c_str() : nullptr; }

const char* pt_fixture_description(size_t index) {
    return index < fixtures().size() ? fixtures()[index].description.c_str() : nullptr;
}

}  // extern "C"
