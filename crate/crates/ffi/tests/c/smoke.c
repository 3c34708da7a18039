#include <stdio.h>
#include <string.h>

#include "distideal.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,  \
              di_last_error_message());                               \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  DiGraph *bull = NULL;
  CHECK(di_graph_from_atlas("bull", &bull) == DI_STATUS_OK);

  size_t n = 0;
  CHECK(di_graph_order(bull, &n) == DI_STATUS_OK && n == 5);

  DiPhi phi;
  CHECK(di_phi(bull, 0, false, &phi) == DI_STATUS_OK);
  CHECK(phi.complete && phi.phi_ideals == 3 && phi.phi_snf == 4);

  bool member = true;
  CHECK(di_lambda_membership(bull, 2, 0, &member) == DI_STATUS_OK && !member);

  char *snf = NULL;
  CHECK(di_smith_normal_form_json(bull, &snf) == DI_STATUS_OK);
  CHECK(strcmp(snf, "[\"1\",\"1\",\"1\",\"1\",\"20\"]") == 0);
  di_string_free(snf);

  int64_t small[4];
  size_t required = 0;
  CHECK(di_distance_matrix(bull, small, 4, &required) == DI_STATUS_BUFFER_TOO_SMALL);
  CHECK(required == 25);
  int64_t d[25];
  CHECK(di_distance_matrix(bull, d, 25, &required) == DI_STATUS_OK && d[0 * 5 + 1] == 3);
  di_graph_free(bull);

  DiGraph *bad = NULL;
  CHECK(di_graph_from_graph6("~~~", &bad) == DI_STATUS_PARSE && bad == NULL);
  CHECK(strlen(di_last_error_message()) > 0);

  size_t edges[] = {0, 1, 2, 3};
  DiGraph *two = NULL;
  CHECK(di_graph_from_edges(4, edges, 2, &two) == DI_STATUS_OK);
  CHECK(di_phi(two, 0, false, &phi) == DI_STATUS_DISCONNECTED);
  di_graph_free(two);

  printf("ok %s\n", di_version());
  return 0;
}
