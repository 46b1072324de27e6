#ifndef POLARTREE_H
#define POLARTREE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pt_session pt_session;

typedef enum pt_status {
    PT_OK = 0,
    PT_VERIFICATION_FAILED = 1,
    PT_ERR_NULL = 2,
    PT_ERR_ARGUMENT = 3,
    PT_ERR_SYNTAX = 4,
    PT_ERR_INPUT = 5,
    PT_ERR_FIELD = 6,
    PT_ERR_TRUNCATION = 7,
    PT_ERR_INTERNAL = 8,
    PT_ERR_OUT_OF_MEMORY = 9
} pt_status;

/* Pair slots: the second slot is only read by "compare". */
enum { PT_FIRST = 0, PT_SECOND = 1 };

pt_session* pt_session_create(void);
void pt_session_destroy(pt_session* session);

/* Expressions over x, y, zeta with + - * / ^ and parentheses. */
pt_status pt_set_pair(pt_session* session, int slot, const char* f, const char* g);

/* Comma-separated roots as polynomials in y; f = y^e1 * prod(x - root). */
pt_status pt_set_roots(pt_session* session, int slot, const char* f_roots, const char* g_roots, int e1, int e2);

pt_status pt_set_fixture(pt_session* session, int slot, const char* name);

/* Initial field conductor; 0 lets the solver choose. */
pt_status pt_set_field(pt_session* session, int conductor);
/* Initial truncation as a rational such as "8" or "17/2". */
pt_status pt_set_trunc(pt_session* session, const char* trunc);
pt_status pt_set_laurent(pt_session* session, int enabled);
/* Shear y -> y + c x; "auto" searches small constants. */
pt_status pt_set_shift(pt_session* session, const char* c);
/* Meromorphic reduction exponent; negative selects the minimal one. */
pt_status pt_set_s(pt_session* session, int s);

/*
 * Runs roots, tree, analyze, verify, factor, compare, reduce or generic.
 * On PT_OK and PT_VERIFICATION_FAILED, *json and *text (each may be NULL) receive
 * strings to release with pt_string_free.
 */
pt_status pt_run(pt_session* session, const char* command, char** json, char** text);

/* Message of the last failure on this session; empty after success. */
const char* pt_last_error(const pt_session* session);
/* Name of the library error code behind the last failure, e.g. "SyntaxError". */
const char* pt_last_error_code(const pt_session* session);

void pt_string_free(char* s);

/* 0 ok, 1 verification failure, 2 input error, 3 field or truncation limitation. */
int pt_exit_code(pt_status status);

const char* pt_version(void);

size_t pt_fixture_count(void);
const char* pt_fixture_name(size_t index);
const char* pt_fixture_description(size_t index);

#ifdef __cplusplus
}
#endif

#endif
