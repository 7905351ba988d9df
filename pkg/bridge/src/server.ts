import express, { type Express, type Request, type Response } from "express";

import {
  answerRequestSchema,
  generateQuestionRequestSchema,
  type ModelProvider,
} from "./protocol.js";

export interface BridgeConfig {
  provider: ModelProvider;
}

/**
 * Build the bridge application.
 *
 * POST /answer            {question, context} -> {answer, unanswerable, confidence}
 * POST /generate_question {sentence, masked_span} -> {question}   (optional capability)
 * GET  /health            {status, model}; 503 until the provider is ready
 *
 * Requests are stateless: identical inputs produce identical outputs for a
 * fixed provider, and concurrent requests are isolated per Express handler.
 */
export function createApp(config: BridgeConfig): Express {
  const { provider } = config;
  const app = express();
  app.use(express.json({ limit: "2mb" }));

  // malformed JSON bodies -> 400 instead of the default HTML error page
  app.use((err: Error, _req: Request, res: Response, next: express.NextFunction) => {
    if (err instanceof SyntaxError) {
      res.status(400).json({ error: "malformed JSON body" });
      return;
    }
    next(err);
  });

  app.get("/health", (_req, res) => {
    if (!provider.ready()) {
      res.status(503).json({ status: "loading", model: provider.name });
      return;
    }
    res.json({ status: "ok", model: provider.name });
  });

  app.post("/answer", async (req, res) => {
    const parsed = answerRequestSchema.safeParse(req.body);
    if (!parsed.success) {
      res.status(400).json({ error: parsed.error.issues[0].message ?? "invalid request" });
      return;
    }
    if (!provider.ready()) {
      res.status(503).json({ error: `model ${provider.name} not loaded` });
      return;
    }
    const { question, context } = parsed.data;
    const answer = await provider.answer(question, context);
    res.json(answer);
  });

  app.post("/generate_question", async (req, res) => {
    const parsed = generateQuestionRequestSchema.safeParse(req.body);
    if (!parsed.success) {
      res.status(400).json({ error: parsed.error.issues[0].message ?? "invalid request" });
      return;
    }
    if (!provider.ready()) {
      res.status(503).json({ error: `model ${provider.name} not loaded` });
      return;
    }
    if (!provider.generateQuestion) {
      res.status(404).json({ error: "question generation not supported by this model" });
      return;
    }
    const { sentence, masked_span } = parsed.data;
    const question = await provider.generateQuestion(sentence, masked_span);
    res.json({ question });
  });

  return app;
}
