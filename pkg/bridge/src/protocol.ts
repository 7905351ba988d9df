import { z } from "zod";

/**
 * Wire protocol shared with the Python client. An answer is empty exactly
 * when the model declares the question unanswerable; confidence is a
 * probability-like score in [0, 1].
 */

export const answerRequestSchema = z.object({
  question: z.string(),
  context: z.string(),
});

export const answerResponseSchema = z
  .object({
    answer: z.string(),
    unanswerable: z.boolean(),
    confidence: z.number().min(0).max(1),
  })
  .refine((r) => r.unanswerable === (r.answer === ""), {
    message: "answer must be empty exactly when unanswerable",
  });

export const generateQuestionRequestSchema = z.object({
  sentence: z.string(),
  masked_span: z.string(),
});

export const generateQuestionResponseSchema = z.object({
  question: z.string().endsWith("?"),
});

export const healthResponseSchema = z.object({
  status: z.enum(["ok", "loading"]),
  model: z.string(),
});

export type AnswerRequest = z.infer<typeof answerRequestSchema>;
export type AnswerResponse = z.infer<typeof answerResponseSchema>;
export type GenerateQuestionRequest = z.infer<typeof generateQuestionRequestSchema>;
export type GenerateQuestionResponse = z.infer<typeof generateQuestionResponseSchema>;
export type HealthResponse = z.infer<typeof healthResponseSchema>;

/** A loaded (or loading) model behind the bridge endpoints. */
export interface ModelProvider {
  readonly name: string;
  ready(): boolean;
  answer(question: string, context: string): Promise<AnswerResponse>;
  generateQuestion?(sentence: string, maskedSpan: string): Promise<string>;
}
