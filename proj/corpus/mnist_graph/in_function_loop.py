import tensorflow as tf


def evaluate(sess, labels, logits, steps):
    for _ in range(steps):
        acc = tf.reduce_mean(tf.cast(tf.equal(labels, logits), tf.float32))  # expect: RNC001, RNC001, RNC001
        sess.run(acc)
