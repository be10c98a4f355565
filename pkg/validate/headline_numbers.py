import pandas as pd
import PyHetSpec as pyhs

# Recompute the quoted sensitivity figures and show how closely they agree
headline = pyhs.headline_check()
with pd.option_context("display.width", 120, "display.max_colwidth", 60):
    print(headline.to_string(index=False, float_format="{:.4g}".format))
print(
    "\n{} of {} figures agree within the quoted precision.".format(
        headline.agrees.sum(), headline.shape[0]
    )
)
