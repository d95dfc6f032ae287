/* The public header must stay consumable from plain C. */
#include <oie/oie_eval.h>

#include <stdio.h>
#include <string.h>

int main(void) {
  if (strlen(oie_version()) == 0) return 1;
  if (strlen(oie_normalization_id()) == 0) return 1;
  oie_gold* gold = NULL;
  if (oie_gold_load("/definitely/not/here.json", &gold) != OIE_E_IO) return 1;
  if (strlen(oie_last_error()) == 0) return 1;
  printf("c header ok: %s\n", oie_version());
  return 0;
}
