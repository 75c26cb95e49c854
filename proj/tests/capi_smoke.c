/* The public header must work from plain C: build a digon, solve for a
 * boundary, and walk the error paths. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "flow3/flow3.h"

#define REQUIRE(cond)                                                \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "FAILED %s:%d: %s (last error: %s)\n",         \
              __FILE__, __LINE__, #cond, f3_last_error());           \
      exit(1);                                                       \
    }                                                                \
  } while (0)

int main(void) {
  uint32_t endpoints[4] = {0, 1, 0, 1};
  f3_graph* digon = NULL;
  REQUIRE(f3_graph_create(2, endpoints, 2, &digon) == F3_OK);
  REQUIRE(f3_graph_vertex_count(digon) == 2);
  REQUIRE(f3_graph_edge_count(digon) == 2);
  REQUIRE(f3_graph_connected(digon) == 1);

  uint8_t beta[2] = {2, 1};
  int8_t dirs[2];
  int found = 0;
  REQUIRE(f3_find_beta_orientation(digon, beta, NULL, &found, dirs) == F3_OK);
  REQUIRE(found == 1);
  int ok = 0;
  REQUIRE(f3_is_beta_orientation(digon, dirs, beta, &ok) == F3_OK);
  REQUIRE(ok == 1);

  f3_verdict* verdict = NULL;
  REQUIRE(f3_z3_connected(digon, 1, 0, 0, 0, 1, &verdict) == F3_OK);
  REQUIRE(f3_verdict_holds(verdict));
  REQUIRE(f3_verdict_boundaries_tested(verdict) == 3);
  f3_verdict_free(verdict);

  /* loops are rejected with a useful message */
  uint32_t loop[2] = {0, 0};
  f3_graph* bad = NULL;
  REQUIRE(f3_graph_create(1, loop, 1, &bad) == F3_ERR_INVALID);
  REQUIRE(strlen(f3_last_error()) > 0);

  char* text = NULL;
  REQUIRE(f3_graph_write_string(digon, &text) == F3_OK);
  REQUIRE(strstr(text, "vertices 2") != NULL);
  f3_graph* again = NULL;
  REQUIRE(f3_graph_read_string(text, &again) == F3_OK);
  REQUIRE(f3_graph_edge_count(again) == 2);
  f3_string_free(text);
  f3_graph_free(again);
  f3_graph_free(digon);

  f3_graph* wheel = NULL;
  REQUIRE(f3_wheel(&wheel) == F3_OK);
  size_t conn = 0;
  REQUIRE(f3_edge_connectivity(wheel, 0, &conn) == F3_OK);
  REQUIRE(conn == 5);
  f3_graph_free(wheel);

  printf("capi smoke ok\n");
  return 0;
}
