/*
   Copyright 2026 algebroid-kit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C API of the algebroid-kit computation kernel.
 *
 * Sessions are opaque handles over a parsed algebroid spec (file text or a
 * built-in fixture). Every command fills *report_json with a NUL-terminated
 * JSON document (schema 1) that the caller frees with ak_free. Return codes:
 *   0  all checks passed
 *   1  a check failed or a math-level error was reported
 *   2  parse or usage error
 * On 1/2 the report (when produced) carries status "fail" or "error".
 */
#ifndef ALGEBROIDKIT_H
#define ALGEBROIDKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ak_session ak_session;

enum {
  AK_OK = 0,
  AK_FAIL = 1,
  AK_USAGE = 2
};

const char* ak_version(void);

/* Frees any buffer returned through a char** out-parameter. */
void ak_free(char* buf);

/* Open a session from spec-file text, a file path, or a built-in fixture
 * name. On failure returns NULL and sets *err (caller frees). Paths named in
 * `target = file:...` entries resolve relative to the opened file. */
ak_session* ak_open_text(const char* text, char** err);
ak_session* ak_open_file(const char* path, char** err);
ak_session* ak_open_fixture(const char* name, char** err);
void ak_close(ak_session* s);

/* Axiom checks for every section present (algebroid, connection, morphism,
 * dual). */
int ak_check(ak_session* s, uint64_t seed, int samples, char** report_json);

/* Exact cohomology dimensions per (degree, weight) up to max_weight;
 * twisted != 0 uses the session's connection as coefficients. */
int ak_cohomology(ak_session* s, long max_weight, int twisted, char** report_json);

/* Homology of the generating operator built from the session's top-power
 * connection. */
int ak_homology(ak_session* s, long max_weight, char** report_json);

/* Homology/cohomology duality tables; with a morphism session, also the
 * factorization of the sub-duality through the induced maps. */
int ak_duality(ak_session* s, ak_session* morphism_or_null, long max_weight,
               char** report_json);

/* Square-zero and generating-identity suites plus multiplier recovery. */
int ak_bv_verify(ak_session* s, uint64_t seed, int samples, char** report_json);

/* Derivation compatibility of the dual differential with the bracket. */
int ak_bialgebroid(ak_session* s, uint64_t seed, int samples, char** report_json);

/* PBW normal form of an enveloping-algebra expression. */
int ak_pbw(ak_session* s, const char* expr, char** report_json);

/* Morphism axioms plus the induced Gerstenhaber-map and cochain-map checks. */
int ak_morphism_check(ak_session* s, uint64_t seed, int samples, int max_degree,
                      char** report_json);

/* Cotangent algebroid of the session's bivector, with its axiom report and
 * emitted spec text. */
int ak_cotangent(ak_session* s, uint64_t seed, char** report_json);

/* Built-in fixtures. */
int ak_fixture_list(char** report_json);
int ak_fixture_emit(const char* name, char** report_json);
/* Spec text alone (byte-identical to the bundled fixture files). */
int ak_fixture_spec_text(const char* name, char** spec_text);

#ifdef __cplusplus
}
#endif

#endif
