/*
 * Copyright 2026 The ckit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the ckit library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call that can fail returns a ckit_status; on failure the message is
 * available from ckit_last_error() until the next call on the same thread.
 * Strings returned through char** are owned by the caller and released with
 * ckit_string_free(). */

#ifndef CKIT_CKIT_H
#define CKIT_CKIT_H

#include <stddef.h>

#if defined(CKIT_BUILDING)
#define CKIT_API __attribute__((visibility("default")))
#else
#define CKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ckit_status {
  CKIT_OK = 0,
  CKIT_ERR_PARSE = 1,
  CKIT_ERR_UNDECLARED = 2,
  CKIT_ERR_ARITY = 3,
  CKIT_ERR_OPEN_TERM = 4,
  CKIT_ERR_PRECONDITION = 5,
  CKIT_ERR_INFERENCE = 6,
  CKIT_ERR_NOT_FOUND = 7,
  CKIT_ERR_IO = 8,
  CKIT_ERR_INVALID_ARGUMENT = 9,
  CKIT_ERR_LIMIT = 10,
  CKIT_ERR_INTERNAL = 11
} ckit_status;

typedef enum ckit_trace_mode {
  CKIT_TRACE_SYMBOLIC = 0,
  CKIT_TRACE_CONCRETE = 1,
  CKIT_TRACE_ABSTRACT = 2
} ckit_trace_mode;

typedef struct ckit_contract ckit_contract;
typedef struct ckit_module ckit_module;
typedef struct ckit_verdict ckit_verdict;

CKIT_API const char* ckit_version(void);
CKIT_API const char* ckit_status_name(ckit_status s);
CKIT_API const char* ckit_last_error(void);
CKIT_API void ckit_string_free(char* s);

/* Contracts. `visible` arguments are comma separated name lists. */
CKIT_API ckit_status ckit_contract_parse(const char* text, ckit_contract** out);
CKIT_API void ckit_contract_free(ckit_contract* c);
CKIT_API ckit_status ckit_contract_print(const ckit_contract* c, char** out);
CKIT_API ckit_status ckit_contract_abstract(const ckit_contract* c, const char* visible, ckit_contract** out);
CKIT_API ckit_status ckit_contract_equivalent(const ckit_contract* a, const ckit_contract* b, int* out);

/* Modules: a declaration block followed by `Name := term` definitions. */
CKIT_API ckit_status ckit_module_load(const char* path, ckit_module** out);
CKIT_API ckit_status ckit_module_parse(const char* text, ckit_module** out);
CKIT_API void ckit_module_free(ckit_module* m);
CKIT_API size_t ckit_module_size(const ckit_module* m);
/* Name of the i-th definition; the pointer lives as long as the module. */
CKIT_API const char* ckit_module_name(const ckit_module* m, size_t i);
/* Refuse process operations whose domain has more than `n` constants;
 * 0 lifts the limit. */
CKIT_API void ckit_module_set_max_consts(ckit_module* m, size_t n);

/* A definition read as a contract term. */
CKIT_API ckit_status ckit_module_contract(const ckit_module* m, const char* name, ckit_contract** out);
/* The inferred type of a process definition; with `visible` non-null, the
 * type of its abstraction. `derivation` may be null. */
CKIT_API ckit_status ckit_module_type(const ckit_module* m, const char* name, const char* visible, ckit_contract** out,
                                      char** derivation);
/* Newline separated transition listing. `visible` is required for the
 * abstract mode and ignored otherwise. */
CKIT_API ckit_status ckit_module_trace(const ckit_module* m, const char* name, ckit_trace_mode mode,
                                       const char* visible, char** out);

/* Decision procedures. */
CKIT_API ckit_status ckit_check_compliance(const ckit_contract* client, const ckit_contract* service,
                                           ckit_verdict** out);
CKIT_API ckit_status ckit_check_subcontract(const ckit_contract* sigma, const ckit_contract* rho, ckit_verdict** out);
/* Both processes are read with the union of the two modules' constants. */
CKIT_API ckit_status ckit_check_abstraction(const ckit_module* am, const char* abstract_name, const ckit_module* cm,
                                            const char* concrete_name, const char* visible, ckit_verdict** out);
/* With `visible` non-null the service runs as its abstraction. */
CKIT_API ckit_status ckit_check_process_compliance(const ckit_module* cm, const char* client_name,
                                                   const ckit_module* sm, const char* service_name,
                                                   const char* visible, ckit_verdict** out);

CKIT_API int ckit_verdict_holds(const ckit_verdict* v);
CKIT_API size_t ckit_verdict_certificate_size(const ckit_verdict* v);
CKIT_API size_t ckit_verdict_counterexample_size(const ckit_verdict* v);
CKIT_API const char* ckit_verdict_counterexample_line(const ckit_verdict* v, size_t i);
CKIT_API ckit_status ckit_verdict_json(const ckit_verdict* v, char** out);
CKIT_API void ckit_verdict_free(ckit_verdict* v);

#ifdef __cplusplus
}
#endif

#endif /* CKIT_CKIT_H */
