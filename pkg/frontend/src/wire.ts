/**
 * Wire-format schemas for the edit-session HTTP API.
 *
 * Every tree travels as a tagged object whose `k` field names the
 * constructor. Zod validates server replies at the boundary so the rest
 * of the client can rely on the static types.
 */
import { z } from "zod";

export type Typ =
  | { k: "num" }
  | { k: "hole" }
  | { k: "arrow"; dom: Typ; cod: Typ }
  | { k: "sum"; left: Typ; right: Typ };

export const TypSchema: z.ZodType<Typ> = z.lazy(() =>
  z.discriminatedUnion("k", [
    z.object({ k: z.literal("num") }),
    z.object({ k: z.literal("hole") }),
    z.object({ k: z.literal("arrow"), dom: TypSchema, cod: TypSchema }),
    z.object({ k: z.literal("sum"), left: TypSchema, right: TypSchema }),
  ]),
);

export type Exp =
  | { k: "var"; name: string }
  | { k: "lam"; x: string; body: Exp }
  | { k: "ap"; fun: Exp; arg: Exp }
  | { k: "num_lit"; n: number }
  | { k: "plus"; l: Exp; r: Exp }
  | { k: "asc"; e: Exp; t: Typ }
  | { k: "empty_hole" }
  | { k: "nonempty_hole"; e: Exp }
  | { k: "inj"; side: "L" | "R"; e: Exp }
  | { k: "case"; scrut: Exp; x: string; l: Exp; y: string; r: Exp };

const Side = z.enum(["L", "R"]);

export const ExpSchema: z.ZodType<Exp> = z.lazy(() =>
  z.discriminatedUnion("k", [
    z.object({ k: z.literal("var"), name: z.string() }),
    z.object({ k: z.literal("lam"), x: z.string(), body: ExpSchema }),
    z.object({ k: z.literal("ap"), fun: ExpSchema, arg: ExpSchema }),
    z.object({ k: z.literal("num_lit"), n: z.number().int().nonnegative() }),
    z.object({ k: z.literal("plus"), l: ExpSchema, r: ExpSchema }),
    z.object({ k: z.literal("asc"), e: ExpSchema, t: TypSchema }),
    z.object({ k: z.literal("empty_hole") }),
    z.object({ k: z.literal("nonempty_hole"), e: ExpSchema }),
    z.object({ k: z.literal("inj"), side: Side, e: ExpSchema }),
    z.object({
      k: z.literal("case"),
      scrut: ExpSchema,
      x: z.string(),
      l: ExpSchema,
      y: z.string(),
      r: ExpSchema,
    }),
  ]),
);

/** Cursor-bearing types: exactly one cursor_t somewhere inside. */
export type ZTyp =
  | { k: "cursor_t"; t: Typ }
  | { k: "arrow_l"; z: ZTyp; cod: Typ }
  | { k: "arrow_r"; dom: Typ; z: ZTyp }
  | { k: "sum_l"; z: ZTyp; right: Typ }
  | { k: "sum_r"; left: Typ; z: ZTyp };

export const ZTypSchema: z.ZodType<ZTyp> = z.lazy(() =>
  z.discriminatedUnion("k", [
    z.object({ k: z.literal("cursor_t"), t: TypSchema }),
    z.object({ k: z.literal("arrow_l"), z: ZTypSchema, cod: TypSchema }),
    z.object({ k: z.literal("arrow_r"), dom: TypSchema, z: ZTypSchema }),
    z.object({ k: z.literal("sum_l"), z: ZTypSchema, right: TypSchema }),
    z.object({ k: z.literal("sum_r"), left: TypSchema, z: ZTypSchema }),
  ]),
);

/** Cursor-bearing expressions; the cursor may sit inside an ascribed type. */
export type ZExp =
  | { k: "cursor_e"; e: Exp }
  | { k: "lam_z"; x: string; z: ZExp }
  | { k: "ap_l"; z: ZExp; arg: Exp }
  | { k: "ap_r"; fun: Exp; z: ZExp }
  | { k: "plus_l"; z: ZExp; r: Exp }
  | { k: "plus_r"; l: Exp; z: ZExp }
  | { k: "asc_l"; z: ZExp; t: Typ }
  | { k: "asc_r"; e: Exp; zt: ZTyp }
  | { k: "nonempty_hole_z"; z: ZExp }
  | { k: "inj_z"; side: "L" | "R"; z: ZExp }
  | { k: "case_scrut"; z: ZExp; x: string; l: Exp; y: string; r: Exp }
  | { k: "case_l"; scrut: Exp; x: string; z: ZExp; y: string; r: Exp }
  | { k: "case_r"; scrut: Exp; x: string; l: Exp; y: string; z: ZExp };

export const ZExpSchema: z.ZodType<ZExp> = z.lazy(() =>
  z.discriminatedUnion("k", [
    z.object({ k: z.literal("cursor_e"), e: ExpSchema }),
    z.object({ k: z.literal("lam_z"), x: z.string(), z: ZExpSchema }),
    z.object({ k: z.literal("ap_l"), z: ZExpSchema, arg: ExpSchema }),
    z.object({ k: z.literal("ap_r"), fun: ExpSchema, z: ZExpSchema }),
    z.object({ k: z.literal("plus_l"), z: ZExpSchema, r: ExpSchema }),
    z.object({ k: z.literal("plus_r"), l: ExpSchema, z: ZExpSchema }),
    z.object({ k: z.literal("asc_l"), z: ZExpSchema, t: TypSchema }),
    z.object({ k: z.literal("asc_r"), e: ExpSchema, zt: ZTypSchema }),
    z.object({ k: z.literal("nonempty_hole_z"), z: ZExpSchema }),
    z.object({ k: z.literal("inj_z"), side: Side, z: ZExpSchema }),
    z.object({
      k: z.literal("case_scrut"),
      z: ZExpSchema,
      x: z.string(),
      l: ExpSchema,
      y: z.string(),
      r: ExpSchema,
    }),
    z.object({
      k: z.literal("case_l"),
      scrut: ExpSchema,
      x: z.string(),
      z: ZExpSchema,
      y: z.string(),
      r: ExpSchema,
    }),
    z.object({
      k: z.literal("case_r"),
      scrut: ExpSchema,
      x: z.string(),
      l: ExpSchema,
      y: z.string(),
      z: ZExpSchema,
    }),
  ]),
);

export type Direction = { k: "child"; n: number } | { k: "parent" };

export type Shape =
  | { k: "arrow" }
  | { k: "num" }
  | { k: "sum" }
  | { k: "asc" }
  | { k: "ap" }
  | { k: "plus" }
  | { k: "nehole" }
  | { k: "var"; x: string }
  | { k: "lam"; x: string }
  | { k: "lit"; n: number }
  | { k: "inj"; side: "L" | "R" }
  | { k: "case"; x: string; y: string };

export type Action =
  | { k: "move"; d: Direction }
  | { k: "del" }
  | { k: "finish" }
  | { k: "construct"; shape: Shape };

export const PaletteEntrySchema = z.object({
  action: z.unknown(),
  text: z.string(),
  enabled: z.boolean(),
});
export type PaletteEntry = z.infer<typeof PaletteEntrySchema>;

export const WireStateSchema = z.object({
  zexp: ZExpSchema,
  text: z.string(),
  typ: TypSchema,
  typ_text: z.string(),
  enabled: z.array(PaletteEntrySchema),
});
export type WireState = z.infer<typeof WireStateSchema>;

export const SessionCreatedSchema = z.object({
  id: z.string(),
  state: WireStateSchema,
});
export type SessionCreated = z.infer<typeof SessionCreatedSchema>;

export const RejectionSchema = z.object({
  error: z.string(),
  action: z.unknown(),
});
export type Rejection = z.infer<typeof RejectionSchema>;
