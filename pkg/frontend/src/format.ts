/**
 * Display Formatting
 *
 * Number rendering conventions shared with the API's own text surfaces:
 * costs to 2 decimals, environmental impact to 3, variable values in
 * shortest natural form (6 significant digits, trailing zeros trimmed).
 */

/** Total cost in M$, 2 decimals: 202 -> "202.00". */
export function fmtCost(value: number): string {
  return value.toFixed(2);
}

/** Environmental impact score, 3 decimals: 0.91 -> "0.910". */
export function fmtImpact(value: number): string {
  return value.toFixed(3);
}

/**
 * Variable value in shortest natural form: 49.0 -> "49",
 * 18.80300043738353 -> "18.803" (6 significant digits, no trailing zeros).
 */
export function fmtValue(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

/** Signed cost delta: 2 -> "+2.00", -0.5 -> "-0.50". */
export function fmtDeltaCost(value: number): string {
  return (value < 0 ? "" : "+") + value.toFixed(2);
}

/** Signed impact delta: -0.094 -> "-0.094", 0 -> "+0.000". */
export function fmtDeltaImpact(value: number): string {
  return (value < 0 ? "" : "+") + value.toFixed(3);
}

/** A variable value with its unit: (49, "Units/$") -> "49 Units/$", (18, "%") -> "18%". */
export function fmtValueWithUnit(value: number, unit: string): string {
  const rendered = fmtValue(value);
  return unit === "%" ? `${rendered}%` : `${rendered} ${unit}`;
}
