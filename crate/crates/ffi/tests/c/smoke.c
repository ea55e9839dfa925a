#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "easycat.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);      \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  EcDiagram *x = NULL, *xx = NULL, *bad = NULL;
  size_t loops = 7, rows = 0, cols = 0;
  char *s = NULL;

  CHECK(ec_diagram_parse("www|www;u1-l3,u2-l2,u3-l1", &x) == EC_STATUS_OK);
  CHECK(ec_diagram_compose(x, x, &xx, &loops) == EC_STATUS_OK);
  CHECK(loops == 0);
  CHECK(ec_diagram_to_string(xx, &s) == EC_STATUS_OK);
  CHECK(strcmp(s, "www|www;u1-l1,u2-l2,u3-l3") == 0);
  ec_string_free(s);

  unsigned char buf[64];
  CHECK(ec_diagram_t_matrix(x, 2, buf, sizeof buf, &rows, &cols) == EC_STATUS_OK);
  CHECK(rows == 8 && cols == 8);
  /* (i,j,k) -> (k,j,i): column 0b001 maps to row 0b100. */
  CHECK(buf[4 * 8 + 1] == 1 && buf[1 * 8 + 1] == 0);

  CHECK(ec_diagram_parse("ww|;u1-u3", &bad) == EC_STATUS_PARSE);
  CHECK(bad == NULL && ec_last_error() != NULL);

  EcClosure *c = NULL;
  EcMembership m;
  CHECK(ec_closure_new("O_N*", 6, &c) == EC_STATUS_OK);
  CHECK(ec_closure_contains(c, x, &m) == EC_STATUS_OK && m == EC_MEMBERSHIP_IN);

  ec_closure_free(c);
  ec_diagram_free(x);
  ec_diagram_free(xx);
  puts("ok");
  return 0;
}
